"""Pairing dominating sets and Dominator's pair-answering strategy.

A pairing dominating set is a family of disjoint vertex pairs ``(u, v)`` such
that the sets ``N[u] & N[v]`` cover the whole graph. Whenever Staller takes
one vertex of a pair, Dominator takes the other; each pair then leaves him a
vertex dominating ``N[u] & N[v]``, so he ends up with a dominating set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ParseError, SizeCapError
from .game import Color, Position
from .graph import Graph, delete_closed_neighborhood

DEFAULT_PAIRING_MAX_N = 40


@dataclass(frozen=True)
class Pairing:
    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[Iterable[int]] = ()):
        norm = []
        seen: set[int] = set()
        for pair in pairs:
            u, v = pair
            if u == v:
                raise ValueError(f"pair ({u}, {v}) repeats a vertex")
            if u in seen or v in seen:
                raise ValueError(f"vertex used by two pairs in ({u}, {v})")
            seen.update((u, v))
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "pairs", tuple(sorted(norm)))

    @classmethod
    def checked(cls, g: Graph, pairs: Iterable[Iterable[int]]) -> Pairing:
        """Build a pairing for ``g``, rejecting pairs whose neighborhoods are disjoint."""
        p = cls(pairs)
        masks = g.closed_masks
        for u, v in p.pairs:
            g.check_vertex(u)
            g.check_vertex(v)
            if not masks[u] & masks[v]:
                raise ValueError(f"pair ({u}, {v}) covers nothing: N[u] and N[v] are disjoint")
        return p

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def vertices(self) -> set[int]:
        return {x for pair in self.pairs for x in pair}

    def partner(self, v: int) -> int | None:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def mapped(self, mapping) -> Pairing:
        """Rename every vertex ``x`` to ``mapping[x]``."""
        return Pairing((mapping[a], mapping[b]) for a, b in self.pairs)

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def pairing_from_json(text: str) -> Pairing:
    try:
        data = json.loads(text)
        return Pairing(data["pairs"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad pairing JSON: {exc}") from None


def pairing_coverage(g: Graph, p: Pairing) -> int:
    masks = g.closed_masks
    covered = 0
    for u, v in p.pairs:
        g.check_vertex(u)
        g.check_vertex(v)
        covered |= masks[u] & masks[v]
    return covered


def is_pairing_dominating_set(g: Graph, p: Pairing) -> bool:
    # Pairing's constructor already enforces distinct vertices.
    return pairing_coverage(g, p) == (1 << g.n) - 1


def find_pairing_exact(g: Graph, *, max_n: int | None = DEFAULT_PAIRING_MAX_N) -> Pairing | None:
    """Exhaustive search for a pairing dominating set.

    Branches on the uncovered vertex with the fewest candidate pairs; any pair
    covering ``w`` lies inside ``N[w]``, so this is complete. Dead
    ``(used, covered)`` states are remembered.
    """
    if max_n is not None and g.n > max_n:
        raise SizeCapError(f"graph has {g.n} vertices; pairing search is capped at {max_n}")
    n = g.n
    full = (1 << n) - 1
    masks = g.closed_masks
    nbrs = [[v for v in range(n) if masks[w] >> v & 1] for w in range(n)]
    cover = {}
    for w in range(n):
        for i, a in enumerate(nbrs[w]):
            for b in nbrs[w][i + 1 :]:
                cover[(a, b)] = masks[a] & masks[b]
    dead: set[tuple[int, int]] = set()
    chosen: list[tuple[int, int]] = []

    def search(used: int, covered: int) -> bool:
        if covered == full:
            return True
        if (used, covered) in dead:
            return False
        best = None
        for w in range(n):
            if covered >> w & 1:
                continue
            free = [v for v in nbrs[w] if not used >> v & 1]
            cands = [(a, b) for i, a in enumerate(free) for b in free[i + 1 :]]
            if not cands:
                dead.add((used, covered))
                return False
            if best is None or len(cands) < len(best):
                best = cands
                if len(cands) == 1:
                    break
        for a, b in best:
            chosen.append((a, b))
            if search(used | 1 << a | 1 << b, covered | cover[(a, b)]):
                return True
            chosen.pop()
        dead.add((used, covered))
        return False

    if search(0, 0):
        return Pairing(chosen)
    return None


def pairing_from_tree_matching(t: Graph) -> Pairing | None:
    """Perfect matching of a forest by repeatedly matching a leaf to its neighbor.

    Returns None when the forest has no perfect matching.
    """
    if not t.is_forest():
        raise ValueError("input is not acyclic")
    alive = [True] * t.n
    deg = [t.degree(v) for v in range(t.n)]
    if any(d == 0 for d in deg):
        return None
    pairs = []
    remaining = t.n
    while remaining:
        leaf = next((v for v in range(t.n) if alive[v] and deg[v] <= 1), None)
        if leaf is None:
            raise AssertionError("forest without a leaf")
        if deg[leaf] == 0:
            return None
        mate = next(u for u in t.adjacency[leaf] if alive[u])
        pairs.append((leaf, mate))
        for x in (leaf, mate):
            alive[x] = False
            remaining -= 1
            for y in t.adjacency[x]:
                if alive[y]:
                    deg[y] -= 1
    return Pairing(pairs)


@dataclass
class PairingStrategyState:
    """Dominator following a pairing; ``occupied`` holds one Color per vertex."""

    graph: Graph
    pairing: Pairing
    occupied: list[Color] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.occupied:
            self.occupied = [Color.UNPLAYED] * self.graph.n
        self._partner = {}
        for a, b in self.pairing.pairs:
            self._partner[a] = b
            self._partner[b] = a

    @classmethod
    def from_position(cls, p: Position, pairing: Pairing) -> PairingStrategyState:
        return cls(p.graph, pairing, list(p.coloring))

    def position(self) -> Position:
        return Position(self.graph, tuple(self.occupied))

    def record(self, v: int, color: Color) -> None:
        if self.occupied[v] is not Color.UNPLAYED:
            raise ValueError(f"vertex {v} is already occupied")
        self.occupied[v] = color

    def unplayed(self) -> list[int]:
        return [v for v, c in enumerate(self.occupied) if c is Color.UNPLAYED]


def strategy_response(s: PairingStrategyState, staller_move: int) -> int | None:
    """Record Staller's move and return (and record) Dominator's answer.

    The answer is the partner of ``staller_move`` if that is still free,
    otherwise the smallest unplayed vertex; None once the board is full.
    """
    s.graph.check_vertex(staller_move)
    if s.occupied[staller_move] is not Color.UNPLAYED:
        raise ValueError(f"vertex {staller_move} is already occupied")
    s.record(staller_move, Color.STALLER)
    mate = s._partner.get(staller_move)
    if mate is not None and s.occupied[mate] is Color.UNPLAYED:
        reply = mate
    else:
        free = s.unplayed()
        if not free:
            return None
        reply = free[0]
    s.record(reply, Color.DOMINATOR)
    return reply


def pairing_strategy_always_dominates(
    g: Graph, pairing: Pairing, opening: int | None = None
) -> bool:
    """Play the pairing strategy against every Staller move sequence.

    Dominator moves second, or first on ``opening`` when given. True iff his
    final set dominates ``g`` in every line of play.
    """
    full = (1 << g.n) - 1
    masks = g.closed_masks

    def explore(state: PairingStrategyState) -> bool:
        free = state.unplayed()
        if not free:
            dom = state.position().mask(Color.DOMINATOR)
            return all(m & dom for m in masks)
        for v in free:
            child = PairingStrategyState(g, state.pairing, list(state.occupied))
            strategy_response(child, v)
            if not explore(child):
                return False
        return True

    start = PairingStrategyState(g, pairing)
    if opening is not None:
        start.record(opening, Color.DOMINATOR)
    return full == 0 or explore(start)


def first_move_pairing(
    g: Graph, *, max_n: int | None = DEFAULT_PAIRING_MAX_N
) -> tuple[int, Pairing] | None:
    """Smallest ``u`` such that ``G \\ N[u]`` has a pairing dominating set.

    The pairing is returned in ``g``'s numbering. Dominator opens on ``u`` and
    then answers with the pairing, so he wins moving first.
    """
    if max_n is not None and g.n > max_n:
        raise SizeCapError(f"graph has {g.n} vertices; pairing search is capped at {max_n}")
    for u in range(g.n):
        rest, old = delete_closed_neighborhood(g, u)
        p = find_pairing_exact(rest, max_n=None)
        if p is not None:
            return u, p.mapped(old)
    return None
