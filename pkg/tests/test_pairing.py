import itertools

import pytest
from hypothesis import given, settings

from mbdom.catalog import D_WITHOUT_PAIRING, DOUBLE_STAR, P3, P4, PAIRING_EXAMPLE, PAIRING_EXAMPLE_PAIRS
from mbdom.errors import ParseError, SizeCapError
from mbdom.game import Color, Outcome, Position, outcome
from mbdom.graph import Graph, complete, cycle, path, star, union
from mbdom.pairing import (
    Pairing,
    PairingStrategyState,
    find_pairing_exact,
    first_move_pairing,
    is_pairing_dominating_set,
    pairing_from_json,
    pairing_from_tree_matching,
    pairing_strategy_always_dominates,
    strategy_response,
)

from test_graph import graphs


def covers(g: Graph, pairs) -> bool:
    covered: set[int] = set()
    for u, v in pairs:
        nu = set(g.adjacency[u]) | {u}
        nv = set(g.adjacency[v]) | {v}
        covered |= nu & nv
    return covered == set(range(g.n))


def brute_force_has_pairing(g: Graph) -> bool:
    """Try every set of disjoint vertex pairs; no pruning, no ordering."""
    verts = list(range(g.n))

    def rec(rest: list[int], chosen: list[tuple[int, int]]) -> bool:
        if covers(g, chosen):
            return True
        if len(rest) < 2:
            return False
        first, tail = rest[0], rest[1:]
        # leave `first` unpaired
        if rec(tail, chosen):
            return True
        for i, other in enumerate(tail):
            if rec(tail[:i] + tail[i + 1 :], chosen + [(first, other)]):
                return True
        return False

    return rec(verts, [])


def test_pairing_normalizes_and_validates():
    p = Pairing([(3, 2), (1, 0)])
    assert p.pairs == ((0, 1), (2, 3))
    assert p.partner(2) == 3 and p.partner(5) is None
    with pytest.raises(ValueError):
        Pairing([(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Pairing([(4, 4)])
    with pytest.raises(ValueError):
        Pairing.checked(path(4), [(0, 3)])


def test_json_roundtrip():
    p = Pairing(PAIRING_EXAMPLE_PAIRS)
    assert pairing_from_json(p.to_json()) == p
    assert p.to_dict() == {"pairs": [[0, 1], [2, 6], [7, 8]]}
    with pytest.raises(ParseError):
        pairing_from_json('{"pairs": [[0]]}')


def test_is_pairing_dominating_set_examples():
    assert is_pairing_dominating_set(PAIRING_EXAMPLE, Pairing(PAIRING_EXAMPLE_PAIRS))
    assert is_pairing_dominating_set(complete(2), Pairing([(0, 1)]))
    assert is_pairing_dominating_set(P4, Pairing([(0, 1), (2, 3)]))
    assert not is_pairing_dominating_set(P4, Pairing([(1, 2)]))
    with pytest.raises(IndexError):
        is_pairing_dominating_set(P3, Pairing([(0, 3)]))


def test_find_pairing_examples():
    assert find_pairing_exact(cycle(5)) is None
    p6 = find_pairing_exact(path(6))
    assert p6 is not None and is_pairing_dominating_set(path(6), p6)
    assert find_pairing_exact(D_WITHOUT_PAIRING) is None
    assert find_pairing_exact(Graph.empty(0)) == Pairing()


def test_non_necessity_both_directions():
    for g in (cycle(5), D_WITHOUT_PAIRING):
        assert outcome(g) is Outcome.D
        assert find_pairing_exact(g) is None
        assert not brute_force_has_pairing(g)


def test_find_pairing_cap():
    with pytest.raises(SizeCapError):
        find_pairing_exact(Graph.empty(41))
    assert find_pairing_exact(Graph.empty(41), max_n=None) is None


@settings(max_examples=80, deadline=None)
@given(graphs(7))
def test_find_pairing_matches_brute_force(g):
    p = find_pairing_exact(g)
    assert (p is not None) == brute_force_has_pairing(g)
    if p is not None:
        assert covers(g, p.pairs)


def test_tree_matching_examples():
    assert pairing_from_tree_matching(P4) == Pairing([(0, 1), (2, 3)])
    assert pairing_from_tree_matching(P3) is None
    assert pairing_from_tree_matching(DOUBLE_STAR) is None
    with pytest.raises(ValueError):
        pairing_from_tree_matching(cycle(4))


def test_tree_matching_on_forest():
    f = union(path(2), path(4))
    m = pairing_from_tree_matching(f)
    assert m is not None and len(m) == 3 and is_pairing_dominating_set(f, m)
    assert pairing_from_tree_matching(union(path(2), Graph.empty(1))) is None


def _has_perfect_matching(g: Graph) -> bool:
    for pairs in itertools.combinations(g.edges, g.n // 2):
        if g.n % 2 == 0 and len({x for e in pairs for x in e}) == g.n:
            return True
    return g.n == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_matching_agrees_with_matching_oracle(n):
    from mbdom.enumeration import free_trees

    for t in free_trees(n):
        m = pairing_from_tree_matching(t)
        assert (m is not None) == _has_perfect_matching(t)
        if m is not None:
            assert is_pairing_dominating_set(t, m)


def test_strategy_response_examples():
    s = PairingStrategyState(complete(2), Pairing([(0, 1)]))
    assert strategy_response(s, 0) == 1
    s = PairingStrategyState(P4, Pairing([(0, 1), (2, 3)]))
    assert strategy_response(s, 3) == 2
    assert s.occupied == [Color.UNPLAYED, Color.UNPLAYED, Color.DOMINATOR, Color.STALLER]
    s = PairingStrategyState(path(5), Pairing([(0, 1), (2, 3)]))
    assert strategy_response(s, 4) == 0
    with pytest.raises(ValueError):
        strategy_response(s, 4)


def test_strategy_response_full_board():
    s = PairingStrategyState(Graph.empty(1), Pairing())
    assert strategy_response(s, 0) is None


def test_strategy_from_position():
    pos = Position.from_sets(P4, dominator=[0], staller=[1])
    s = PairingStrategyState.from_position(pos, Pairing([(0, 1), (2, 3)]))
    assert strategy_response(s, 2) == 3
    assert s.position().unplayed() == []


def test_strategy_wins_on_pairing_example():
    assert pairing_strategy_always_dominates(PAIRING_EXAMPLE, Pairing(PAIRING_EXAMPLE_PAIRS))
    # a non-covering family does not guarantee anything
    assert not pairing_strategy_always_dominates(P4, Pairing([(1, 2)]))


@settings(max_examples=60, deadline=None)
@given(graphs(6))
def test_strategy_wins_whenever_pairing_exists(g):
    p = find_pairing_exact(g)
    if p is None:
        return
    assert pairing_strategy_always_dominates(g, p)
    assert outcome(g) is Outcome.D


def test_first_move_pairing_examples():
    assert first_move_pairing(P3) == (1, Pairing())
    assert first_move_pairing(star(3)) == (0, Pairing())
    assert first_move_pairing(DOUBLE_STAR) is None


def test_first_move_pairing_translates_indices():
    g = path(5)
    u, p = first_move_pairing(g)
    # removing N[0] leaves a P3, which has no pairing
    assert (u, p) == (1, Pairing([(3, 4)]))
    assert pairing_strategy_always_dominates(g, p, opening=u)


@settings(max_examples=60, deadline=None)
@given(graphs(6))
def test_first_move_pairing_implies_at_least_n(g):
    fm = first_move_pairing(g)
    if fm is None:
        return
    u, p = fm
    assert outcome(g) >= Outcome.N
    assert pairing_strategy_always_dominates(g, p, opening=u)
