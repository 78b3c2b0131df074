"""Exact solver for the Maker-Breaker domination game.

Dominator claims vertices trying to build a dominating set; Staller claims
vertices trying to own a whole closed neighborhood. The search is a plain
memoized minimax over bitmask positions keyed by ``(Dominator set, Staller
set, player to move)``. There is no symmetry reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import InternalConsistencyError, SizeCapError
from .graph import Graph

DEFAULT_MAX_N = 24


class Player(Enum):
    DOMINATOR = "Dominator"
    STALLER = "Staller"

    @property
    def opponent(self) -> Player:
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR


class Color(Enum):
    UNPLAYED = "Unplayed"
    DOMINATOR = "Dominator"
    STALLER = "Staller"

    @classmethod
    def of(cls, player: Player) -> Color:
        return cls.DOMINATOR if player is Player.DOMINATOR else cls.STALLER


class Winner(Enum):
    DOMINATOR_WINS = "DominatorWins"
    STALLER_WINS = "StallerWins"

    @classmethod
    def of(cls, player: Player) -> Winner:
        return cls.DOMINATOR_WINS if player is Player.DOMINATOR else cls.STALLER_WINS

    @property
    def player(self) -> Player:
        return Player.DOMINATOR if self is Winner.DOMINATOR_WINS else Player.STALLER


class Outcome(IntEnum):
    """Outcome of a starting position, ordered ``S < N < D``."""

    S = 0
    N = 1
    D = 2

    @property
    def caption(self) -> str:
        return _CAPTIONS[self]


_CAPTIONS = {
    Outcome.S: "Staller always wins",
    Outcome.N: "First player wins",
    Outcome.D: "Dominator always wins",
}


@dataclass(frozen=True)
class Position:
    graph: Graph
    coloring: tuple[Color, ...]

    def __post_init__(self) -> None:
        if len(self.coloring) != self.graph.n:
            raise ValueError("coloring must have one entry per vertex")

    @classmethod
    def start(cls, g: Graph) -> Position:
        return cls(g, (Color.UNPLAYED,) * g.n)

    @classmethod
    def from_sets(cls, g: Graph, dominator=(), staller=()) -> Position:
        col = [Color.UNPLAYED] * g.n
        for v in dominator:
            col[v] = Color.DOMINATOR
        for v in staller:
            if col[v] is not Color.UNPLAYED:
                raise ValueError(f"vertex {v} colored twice")
            col[v] = Color.STALLER
        return cls(g, tuple(col))

    def play(self, v: int, player: Player) -> Position:
        self.graph.check_vertex(v)
        if self.coloring[v] is not Color.UNPLAYED:
            raise ValueError(f"vertex {v} is already occupied")
        col = list(self.coloring)
        col[v] = Color.of(player)
        return Position(self.graph, tuple(col))

    def mask(self, color: Color) -> int:
        m = 0
        for v, c in enumerate(self.coloring):
            if c is color:
                m |= 1 << v
        return m

    def unplayed(self) -> list[int]:
        return [v for v, c in enumerate(self.coloring) if c is Color.UNPLAYED]

    @property
    def is_start(self) -> bool:
        return all(c is Color.UNPLAYED for c in self.coloring)


@dataclass(frozen=True)
class SolveReport:
    winner: Winner
    best_move: int | None
    states_explored: int
    memo_hits: int


def dominator_has_won(p: Position) -> bool:
    """True iff the Dominator vertices dominate the graph."""
    dom = p.mask(Color.DOMINATOR)
    return all(m & dom for m in p.graph.closed_masks)


def staller_has_won(p: Position) -> int | None:
    """Smallest vertex whose closed neighborhood is entirely Staller's, if any."""
    stall = p.mask(Color.STALLER)
    for v, m in enumerate(p.graph.closed_masks):
        if m & stall == m:
            return v
    return None


def check_cap(g: Graph, max_n: int | None) -> None:
    if max_n is not None and g.n > max_n:
        raise SizeCapError(
            f"graph has {g.n} vertices; the exact solver is capped at {max_n} "
            "(raise max_n to override)"
        )


class _Search:
    """Memoized minimax over one graph. One instance per solve call."""

    def __init__(self, g: Graph, max_degree_first: bool = False):
        self.n = g.n
        self.masks = g.closed_masks
        self.full = (1 << g.n) - 1
        order = list(range(g.n))
        if max_degree_first:
            order.sort(key=lambda v: (-g.degree(v), v))
        self.order = tuple(order)
        self.bits = tuple(1 << v for v in order)
        self.memo: dict[int, bool] = {}
        self.states = 0
        self.hits = 0

    def terminal(self, dom: int, stall: int) -> bool | None:
        """Winner if already decided (True for Dominator), else None."""
        undominated = False
        for m in self.masks:
            if not m & dom:
                if m & stall == m:
                    return False
                undominated = True
        if not undominated:
            return True
        if (dom | stall) == self.full:
            raise InternalConsistencyError("full board with neither player winning")
        return None

    def dominator_wins(self, dom: int, stall: int, dom_to_move: bool) -> bool:
        n = self.n
        key = dom | (stall << n) | (dom_to_move << (2 * n))
        memo = self.memo
        if key in memo:
            self.hits += 1
            return memo[key]
        self.states += 1
        result = self.terminal(dom, stall)
        if result is None:
            taken = dom | stall
            if dom_to_move:
                result = False
                for b in self.bits:
                    if not taken & b and self.dominator_wins(dom | b, stall, False):
                        result = True
                        break
            else:
                result = True
                for b in self.bits:
                    if not taken & b and not self.dominator_wins(dom, stall | b, True):
                        result = False
                        break
        memo[key] = result
        return result


def solve_position(
    p: Position,
    to_move: Player,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    max_degree_first: bool = False,
) -> SolveReport:
    """Winner of ``p`` under optimal play when ``to_move`` moves next.

    ``best_move`` is a winning move for ``to_move`` when one exists, otherwise
    the smallest unplayed vertex. It is None only on a full board.
    """
    g = p.graph
    check_cap(g, max_n)
    search = _Search(g, max_degree_first)
    dom = p.mask(Color.DOMINATOR)
    stall = p.mask(Color.STALLER)
    dom_to_move = to_move is Player.DOMINATOR
    dom_wins = search.dominator_wins(dom, stall, dom_to_move)
    winner = Winner.DOMINATOR_WINS if dom_wins else Winner.STALLER_WINS

    free = [v for v in search.order if not (dom | stall) >> v & 1]
    best = min(free) if free else None
    mover_wins = dom_wins == dom_to_move
    if mover_wins and free and search.terminal(dom, stall) is None:
        for v in free:
            b = 1 << v
            if dom_to_move:
                ok = search.dominator_wins(dom | b, stall, False)
            else:
                ok = not search.dominator_wins(dom, stall | b, True)
            if ok:
                best = v
                break
    return SolveReport(winner, best, search.states, search.hits)


def outcome_from_winners(dominator_first: Winner, staller_first: Winner) -> Outcome:
    d1 = dominator_first is Winner.DOMINATOR_WINS
    d2 = staller_first is Winner.DOMINATOR_WINS
    if d1 and d2:
        return Outcome.D
    if not d1 and not d2:
        return Outcome.S
    if d1:
        return Outcome.N
    raise InternalConsistencyError("second player wins from both sides (outcome P)")


def outcome(
    g: Graph, *, max_n: int | None = DEFAULT_MAX_N, max_degree_first: bool = False
) -> Outcome:
    """Outcome of the starting position on ``g`` by exhaustive search."""
    check_cap(g, max_n)
    search = _Search(g, max_degree_first)
    first = search.dominator_wins(0, 0, True)
    second = search.dominator_wins(0, 0, False)
    return outcome_from_winners(
        Winner.DOMINATOR_WINS if first else Winner.STALLER_WINS,
        Winner.DOMINATOR_WINS if second else Winner.STALLER_WINS,
    )


@dataclass(frozen=True)
class OutcomeReport:
    outcome: Outcome
    # winning opening for each side when it moves first, None if it loses moving first
    dominator_move: int | None
    staller_move: int | None
    states_explored: int
    memo_hits: int


def analyze(
    g: Graph, *, max_n: int | None = DEFAULT_MAX_N, max_degree_first: bool = False
) -> OutcomeReport:
    """Outcome of ``g`` together with a winning first move for each side that has one."""
    check_cap(g, max_n)
    search = _Search(g, max_degree_first)
    first = search.dominator_wins(0, 0, True)
    second = search.dominator_wins(0, 0, False)
    res = outcome_from_winners(
        Winner.DOMINATOR_WINS if first else Winner.STALLER_WINS,
        Winner.DOMINATOR_WINS if second else Winner.STALLER_WINS,
    )
    dmove = smove = None
    if first and g.n:
        dmove = next(v for v in range(g.n) if search.dominator_wins(1 << v, 0, False))
    if not second:
        smove = next(v for v in range(g.n) if not search.dominator_wins(0, 1 << v, True))
    return OutcomeReport(res, dmove, smove, search.states, search.hits)


def es_sum_criterion(g: Graph) -> bool:
    """Erdos-Selfridge test on closed neighborhoods: sum of 2^-|N[u]| < 1/2.

    Evaluated exactly as sum 2^(M-|N[u]|) < 2^(M-1) with M the largest
    closed neighborhood size. True means Dominator wins playing second.
    """
    if g.n == 0:
        return True
    sizes = [bin(m).count("1") for m in g.closed_masks]
    big = max(sizes)
    return sum(1 << (big - s) for s in sizes) < 1 << (big - 1)


def es_min_degree_criterion(g: Graph) -> bool:
    """``n < 2**delta``; vacuously true on the empty graph."""
    if g.n == 0:
        return True
    return g.n < 1 << g.min_degree()
