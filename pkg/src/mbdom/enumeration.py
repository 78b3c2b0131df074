"""Small-instance families used by the experiments: exhaustive and seeded random."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .cotree import Cotree
from .graph import Graph
from .reductions import PosCnfFormula, ThreeSatFormula


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every graph on vertices ``0..n-1`` (``2**C(n,2)`` of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def _tree_code(adj: list[list[int]], root: int, parent: int = -1) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_canonical_form(t: Graph) -> str:
    adj = [sorted(a) for a in t.adjacency]
    return min(_tree_code(adj, c) for c in _centers(adj))


def free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Built by attaching a leaf anywhere to each tree on ``n-1`` vertices and
    keeping the first tree seen of each canonical form.
    """
    if n < 1:
        return []
    level = [Graph.empty(1)]
    for size in range(2, n + 1):
        seen: dict[str, Graph] = {}
        for t in level:
            for v in range(t.n):
                grown = Graph.from_edges(size, t.edges + ((v, size - 1),))
                seen.setdefault(tree_canonical_form(grown), grown)
        level = list(seen.values())
    return level


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random labeled tree; vertex ``i > 0`` hangs from a uniform earlier vertex, then labels are shuffled."""
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[i], perm[rng.randrange(i)]) for i in range(1, n)])


def random_cotree(leaves: int, rng: random.Random) -> Cotree:
    """Random cotree with ``leaves`` leaves; nodes get 2 or 3 children, kinds drawn at random."""
    if leaves == 1:
        return Cotree.leaf()
    k = 2 if leaves == 2 or rng.random() < 0.7 else 3
    cuts = sorted(rng.sample(range(1, leaves), k - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [leaves])]
    children = tuple(random_cotree(s, rng) for s in sizes)
    return Cotree.union(*children) if rng.random() < 0.5 else Cotree.join(*children)


def poscnf_family(max_vars: int, max_clauses: int) -> Iterator[PosCnfFormula]:
    """Every multiset of at most ``max_clauses`` non-empty clauses, for 1..max_vars variables."""
    for n in range(1, max_vars + 1):
        subsets = [
            c for r in range(1, n + 1) for c in itertools.combinations(range(n), r)
        ]
        for m in range(1, max_clauses + 1):
            for chosen in itertools.combinations_with_replacement(subsets, m):
                yield PosCnfFormula(n, chosen)


def random_threesat(num_vars: int, num_clauses: int, rng: random.Random) -> ThreeSatFormula | None:
    """Random formula, or None when the draw misses the both-signs requirement."""
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    try:
        return ThreeSatFormula.of(num_vars, clauses)
    except ValueError:
        return None


def all_sign_patterns(num_vars: int = 3) -> ThreeSatFormula:
    """All eight sign patterns on variables 1..3: unsatisfiable."""
    if num_vars != 3:
        raise ValueError("defined for three variables")
    return ThreeSatFormula.of(
        3, [tuple(s * v for s, v in zip(signs, (1, 2, 3)))
            for signs in itertools.product((1, -1), repeat=3)]
    )  # fmt: skip


def threesat_fixtures(count: int = 24, seed: int = 0) -> list[ThreeSatFormula]:
    """Deterministic formula family: a few hand-picked ones, then seeded random draws."""
    rng = random.Random(seed)
    out = [
        ThreeSatFormula.of(3, [(1, 2, 3), (-1, -2, -3)]),
        ThreeSatFormula.of(3, [(1, -2, 3), (-1, 2, -3)]),
        all_sign_patterns(),
    ]
    while len(out) < count:
        f = random_threesat(rng.choice((3, 4)), rng.randint(2, 8), rng)
        if f is not None and f not in out:
            out.append(f)
    return out
