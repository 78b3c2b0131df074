"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import time

from mbdom import experiments as ex
from mbdom.catalog import D_WITHOUT_PAIRING, DOUBLE_STAR, P3, P4
from mbdom.enumeration import all_labeled_graphs, free_trees, poscnf_family, threesat_fixtures
from mbdom.game import Outcome, outcome
from mbdom.graph import Graph, cycle, join, union
from mbdom.pairing import find_pairing_exact, is_pairing_dominating_set, pairing_from_tree_matching
from mbdom.reductions import sat_brute_force
from mbdom.structured import join_outcome, tree_outcome

S, N, D = Outcome.S, Outcome.N, Outcome.D

# witnesses for each outcome
WITNESS = {D: P4, N: P3, S: DOUBLE_STAR}

# union table, row o(G), column o(H)
UNION_TABLE = {
    (D, D): D, (D, N): N, (D, S): S,
    (N, D): N, (N, N): S, (N, S): S,
    (S, D): S, (S, N): S, (S, S): S,
}  # fmt: skip


def _timed(fn):
    t0 = time.perf_counter()
    res = fn()
    return res, time.perf_counter() - t0


def test_criterion_01_reference_outcomes(criterion):
    got, dt = _timed(lambda: {o: outcome(g) for o, g in WITNESS.items()})
    ok = all(got[o] is o for o in WITNESS) and dt < 1
    criterion(1, ok, f"P4={got[D].name} P3={got[N].name} double-star={got[S].name}, {dt:.2f}s (< 1s)")
    assert ok


def test_criterion_02_union_table(criterion):
    def check():
        return {(a, b): outcome(union(WITNESS[a], WITNESS[b])) for a, b in UNION_TABLE}

    got, dt = _timed(check)
    hits = sum(got[k] is UNION_TABLE[k] for k in UNION_TABLE)
    ok = hits == 9 and dt < 30
    criterion(2, ok, f"{hits}/9 union outcomes match the table, {dt:.2f}s (< 30s)")
    assert ok


def test_criterion_03_join_rule(criterion):
    catalog = [Graph.empty(1), P4, P3, DOUBLE_STAR]

    def check():
        bad = []
        for g in catalog:
            for h in catalog:
                want = join_outcome(g.n, outcome(g), h.n, outcome(h))
                if outcome(join(g, h)) is not want:
                    bad.append((g.n, h.n))
        return bad

    bad, dt = _timed(check)
    ok = not bad and dt < 30
    criterion(3, ok, f"{len(catalog) ** 2 - len(bad)}/{len(catalog) ** 2} joins match, {dt:.2f}s (< 30s)")
    assert ok


def test_criterion_04_d_without_pairing(criterion):
    def check():
        return [(outcome(g), find_pairing_exact(g)) for g in (cycle(5), D_WITHOUT_PAIRING)]

    res, dt = _timed(check)
    ok = all(o is D and p is None for o, p in res) and dt < 10
    criterion(4, ok, f"C5 and the 10-vertex graph: outcomes {[o.name for o, _ in res]}, "
                     f"pairings {[p for _, p in res]}, {dt:.2f}s (< 10s)")  # fmt: skip
    assert ok


def test_criterion_05_no_p(criterion):
    res = ex.no_p(max_n=6)
    at_six = sum(1 for _ in all_labeled_graphs(6))
    ok = res.passed and at_six == 32768 and res.elapsed < 600
    criterion(5, ok, f"{res.cases} graphs (32768 at n=6), {len(res.failures)} failures, "
                     f"{res.details['outcomes']}, {res.elapsed:.1f}s (< 10 min)")  # fmt: skip
    assert ok


def test_criterion_06_monotonicity(criterion):
    res = ex.monotonicity(cases=1000, max_n=7, seed=1)
    ok = res.passed and res.cases == 1000 and res.elapsed < 300
    criterion(6, ok, f"{res.cases} cases, {len(res.failures)} violations, {res.elapsed:.1f}s (< 5 min)")
    assert ok


def test_criterion_07_tree_oracle(criterion):
    res = ex.tree_oracle(max_n=10)
    count10 = len(free_trees(10))
    ok = res.passed and count10 == 106 and res.elapsed < 300
    criterion(7, ok, f"{res.cases} free trees (106 at n=10), {len(res.failures)} disagreements, "
                     f"{res.elapsed:.1f}s (< 5 min)")  # fmt: skip
    assert ok


def test_criterion_08_cograph_oracle(criterion):
    res = ex.cograph_oracle(cases=500, max_leaves=9, seed=3)
    ok = res.passed and res.cases >= 500 and res.elapsed < 300
    criterion(8, ok, f"{res.cases} cotrees, {len(res.failures)} failures, {res.elapsed:.1f}s (< 5 min)")
    assert ok


def test_criterion_09_tree_matching(criterion):
    total = agree = 0
    for n in range(1, 11):
        for t in free_trees(n):
            total += 1
            m = pairing_from_tree_matching(t)
            if (tree_outcome(t) is D) == (m is not None) and (m is None or is_pairing_dominating_set(t, m)):
                agree += 1
    ok = agree == total
    criterion(9, ok, f"{agree}/{total} trees: outcome D iff perfect matching")
    assert ok


def test_criterion_10_pairing_soundness(criterion):
    res = ex.pairing_soundness(cases=500, max_n=9, seed=2, strategy_max_n=6)
    sims = res.details["strategy_simulations"]
    ok = res.passed and res.cases == 500 and sims > 0
    criterion(10, ok, f"{res.cases} graphs with a pairing all D, {sims} strategy simulations (n <= 6), "
                      f"{len(res.failures)} failures")  # fmt: skip
    assert ok


def test_criterion_11_erdos_selfridge(criterion):
    res = ex.es_soundness(max_n=6)
    ok = res.passed
    criterion(11, ok, f"{res.cases} graphs, {res.details['criterion_true']} criterion-true, "
                      f"{len(res.failures)} failures")  # fmt: skip
    assert ok


def test_criterion_12_poscnf_reduction(criterion):
    res = ex.reduction_equiv(max_vars=3, max_clauses=3)
    expected = sum(1 for _ in poscnf_family(3, 3)) + 1
    ok = res.passed and res.cases == expected and res.elapsed < 600
    criterion(12, ok, f"{res.cases} formulas (incl. the reference formula) x 2 constructions x 2 movers, "
                      f"{len(res.failures)} mismatches, {res.elapsed:.1f}s (< 10 min)")  # fmt: skip
    assert ok


def test_criterion_13_threesat_reduction(criterion):
    fixtures = threesat_fixtures()
    unsat = sum(sat_brute_force(f) is None for f in fixtures)
    res = ex.threesat_equiv()
    ok = res.passed and res.cases >= 20 and unsat >= 1 and res.elapsed < 600
    criterion(13, ok, f"{res.cases} formulas ({unsat} unsatisfiable), {len(res.failures)} failures, "
                      f"{res.elapsed:.1f}s (< 10 min)")  # fmt: skip
    assert ok


def test_criterion_14_neutrality(criterion):
    res = ex.neutrality(sizes=(2, 3, 4, 5), cases=50, max_n=7, seed=4)
    ok = res.passed and res.cases == 4 * 51 and res.elapsed < 600
    criterion(14, ok, f"H2..H5 neutral, {res.cases - 4} glued graphs, {len(res.failures)} changes, "
                      f"{res.elapsed:.1f}s (< 10 min)")  # fmt: skip
    assert ok
