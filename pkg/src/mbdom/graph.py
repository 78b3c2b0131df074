"""Simple undirected graphs on vertices ``0..n-1`` and the operators used on them.

Graphs are immutable. Every operator that renumbers vertices either follows a
fixed documented convention (``union``, ``join``) or returns the index mapping
explicitly (``glue``, ``induced_subgraph``, ``delete_closed_neighborhood``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have exactly n entries")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    # -- basic queries -------------------------------------------------

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def check_vertex(self, u: int) -> None:
        if not isinstance(u, int) or not 0 <= u < self.n:
            raise IndexError(f"vertex {u!r} not in graph with {self.n} vertices")

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods as bitmasks, ``closed_masks[u] >> v & 1`` iff v in N[u]."""
        masks = []
        for u, nbrs in enumerate(self.adjacency):
            m = 1 << u
            for v in nbrs:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def complement(self) -> Graph:
        everyone = frozenset(range(self.n))
        return Graph(self.n, tuple(everyone - a - {u} for u, a in enumerate(self.adjacency)))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, self.edges + ((u, v),))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced on ``vertices``; the mapping lists old indices by new index."""
        keep = tuple(sorted(set(vertices)))
        for u in keep:
            self.check_vertex(u)
        new_index = {old: new for new, old in enumerate(keep)}
        adj = tuple(
            frozenset(new_index[w] for w in self.adjacency[old] if w in new_index) for old in keep
        )
        return Graph(len(keep), adj), keep

    def remove_vertex(self, u: int) -> tuple[Graph, tuple[int, ...]]:
        self.check_vertex(u)
        return self.induced_subgraph(v for v in range(self.n) if v != u)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for v in self.adjacency[u]:
                    if side[v] < 0:
                        side[v] = 1 - side[u]
                        stack.append(v)
                    elif side[v] == side[u]:
                        return False
        return True

    # -- serialization -------------------------------------------------

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# -- parsing -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines are skipped; CRLF line endings are accepted. Duplicate edges
    collapse into one.
    """
    rows = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    rows = [(i, line) for i, line in rows if line]
    if not rows:
        raise ParseError("missing header 'n m'", line=1)
    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", line=lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {m} edge lines, found {len(body)}", line=where)
    edges = []
    for lineno, line in body:
        u, v = _two_ints(line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range [0, {n})", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line!r}", line=lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line!r}", line=lineno) from None


def graph_from_dict(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad JSON graph: {exc}") from None
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_json_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("JSON graph must be an object")
    return graph_from_dict(data)


# -- operators ---------------------------------------------------------


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``g`` keeps its indices, ``h`` is shifted by ``g.n``."""
    shift = g.n
    return Graph.from_edges(
        g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    )


def join(g: Graph, h: Graph) -> Graph:
    """Union of ``g`` and ``h`` plus every edge between them (same numbering as ``union``)."""
    shift = g.n
    cross = [(u, v + shift) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(
        g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges] + cross
    )


class GlueResult(NamedTuple):
    graph: Graph
    w: int
    g_map: tuple[int, ...]
    h_map: tuple[int, ...]


def glue(g: Graph, u: int, h: Graph, v: int) -> GlueResult:
    """Identify ``u`` of ``g`` with ``v`` of ``h``.

    The merged vertex keeps ``u``'s index, so ``g`` is never renumbered; the
    vertices of ``h`` other than ``v`` are appended in order. ``g_map[i]`` and
    ``h_map[j]`` give the new index of old vertices.
    """
    g.check_vertex(u)
    h.check_vertex(v)
    g_map = tuple(range(g.n))
    h_map_list = []
    nxt = g.n
    for j in range(h.n):
        if j == v:
            h_map_list.append(u)
        else:
            h_map_list.append(nxt)
            nxt += 1
    h_map = tuple(h_map_list)
    edges = list(g.edges) + [(h_map[a], h_map[b]) for a, b in h.edges]
    return GlueResult(Graph.from_edges(g.n + h.n - 1, edges), u, g_map, h_map)


def closed_neighborhood(g: Graph, u: int) -> frozenset[int]:
    g.check_vertex(u)
    return g.adjacency[u] | {u}


def delete_closed_neighborhood(g: Graph, u: int) -> tuple[Graph, tuple[int, ...]]:
    """``G \\ N[u]`` together with the old index of each surviving vertex."""
    gone = closed_neighborhood(g, u)
    return g.induced_subgraph(w for w in range(g.n) if w not in gone)


# -- generators --------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 and leaves 1..n."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def hanging_split(n: int) -> Graph:
    """Clique ``{0, 1..n-1}`` with a pendant vertex ``n-1+i`` on each clique vertex ``i >= 1``.

    Vertex 0 is the distinguished clique vertex without a pendant.
    """
    if n < 2:
        raise ValueError("hanging split graph needs n >= 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, n - 1 + i) for i in range(1, n)]
    return Graph.from_edges(2 * n - 1, edges)


def double_star(a: int = 2, b: int = 2) -> Graph:
    """Adjacent centers 0 and 1 carrying ``a`` and ``b`` leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)
