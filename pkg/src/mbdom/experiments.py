"""Named verification experiments: each compares a claim against the exact engine.

Every experiment returns an :class:`ExperimentResult` listing the cases that
failed, so a non-empty ``failures`` list is a counterexample report.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import enumeration as en
from .catalog import DOUBLE_STAR, P3, P4
from .cotree import cotree_to_graph, recognize_cograph
from .errors import InternalConsistencyError
from .game import (
    Outcome,
    Player,
    Position,
    es_min_degree_criterion,
    es_sum_criterion,
    outcome,
    solve_position,
)
from .graph import glue, hanging_split
from .pairing import (
    find_pairing_exact,
    first_move_pairing,
    is_pairing_dominating_set,
    pairing_from_tree_matching,
    pairing_strategy_always_dominates,
)
from .reductions import (
    PosCnfFormula,
    assignment_to_pairing,
    pairing_to_assignment,
    poscnf_to_graph,
    poscnf_to_split_graph,
    sat_brute_force,
    solve_poscnf,
    threesat_to_pairing_graph,
)
from .structured import (
    classify_irreducible_tree,
    cograph_outcome,
    cograph_pairing,
    is_neutral,
    reduce_pendant_p2,
    tree_outcome,
)

# reference formula: (X1 v X2) & (X1 v X4) & (X2 v X3 v X4)
REFERENCE_FORMULA = PosCnfFormula(4, [(0, 1), (0, 3), (1, 2, 3)])


@dataclass
class ExperimentResult:
    name: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.cases > 0

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures, "
            f"{self.elapsed:.1f}s"
        )


def _timed(fn: Callable[..., ExperimentResult]) -> Callable[..., ExperimentResult]:
    def wrapper(*args, **kwargs) -> ExperimentResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def no_p(max_n: int = 6) -> ExperimentResult:
    """Every labeled graph on up to ``max_n`` vertices has outcome S, N or D."""
    res = ExperimentResult("no-p")
    counts = {o.name: 0 for o in Outcome}
    for n in range(0, max_n + 1):
        for g in en.all_labeled_graphs(n):
            res.cases += 1
            try:
                counts[outcome(g).name] += 1
            except InternalConsistencyError as exc:
                res.failures.append({"graph": g.to_dict(), "error": str(exc)})
    res.details["outcomes"] = counts
    return res


@_timed
def monotonicity(cases: int = 1000, max_n: int = 7, seed: int = 1) -> ExperimentResult:
    """Adding an edge never lowers the outcome in the order S < N < D."""
    rng = random.Random(seed)
    res = ExperimentResult("monotonicity")
    while res.cases < cases:
        n = rng.randint(2, max_n)
        g = en.random_graph(n, rng, rng.uniform(0.1, 0.9))
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
        if not missing:
            continue
        u, v = rng.choice(missing)
        res.cases += 1
        before, after = outcome(g), outcome(g.add_edge(u, v))
        if after < before:
            res.failures.append(
                {"graph": g.to_dict(), "edge": [u, v], "before": before.name, "after": after.name}
            )
    return res


@_timed
def es_soundness(max_n: int = 6) -> ExperimentResult:
    """Both Erdos-Selfridge tests imply outcome D; the min-degree test implies the sum test."""
    res = ExperimentResult("es-soundness")
    fired = 0
    for n in range(1, max_n + 1):
        for g in en.all_labeled_graphs(n):
            res.cases += 1
            s, m = es_sum_criterion(g), es_min_degree_criterion(g)
            if m and not s:
                res.failures.append({"graph": g.to_dict(), "error": "min-degree without sum"})
            if s or m:
                fired += 1
                o = outcome(g)
                if o is not Outcome.D:
                    res.failures.append({"graph": g.to_dict(), "outcome": o.name})
    res.details["criterion_true"] = fired
    return res


@_timed
def pairing_soundness(
    cases: int = 500, max_n: int = 9, seed: int = 2, strategy_max_n: int = 6
) -> ExperimentResult:
    """Graphs with a pairing dominating set are D, and the pair-answering strategy wins.

    Draws random graphs until ``cases`` of them have a pairing. Along the way,
    graphs where the first-move pairing exists are checked to be at least N.
    """
    rng = random.Random(seed)
    res = ExperimentResult("pairing-soundness")
    simulated = first_move_checks = draws = 0
    while res.cases < cases:
        draws += 1
        g = en.random_graph(rng.randint(1, max_n), rng, rng.uniform(0.2, 0.8))
        p = find_pairing_exact(g)
        o = outcome(g)
        if p is None:
            fm = first_move_pairing(g)
            if fm is not None:
                first_move_checks += 1
                if o < Outcome.N:
                    res.failures.append({"graph": g.to_dict(), "first_move": fm[0], "outcome": o.name})
            continue
        res.cases += 1
        if not is_pairing_dominating_set(g, p) or o is not Outcome.D:
            res.failures.append({"graph": g.to_dict(), "pairing": p.to_dict(), "outcome": o.name})
        if g.n <= strategy_max_n:
            simulated += 1
            if not pairing_strategy_always_dominates(g, p):
                res.failures.append({"graph": g.to_dict(), "pairing": p.to_dict(), "error": "strategy lost"})
    res.details.update(draws=draws, strategy_simulations=simulated, first_move_checks=first_move_checks)
    return res


@_timed
def cograph_oracle(cases: int = 500, max_leaves: int = 9, seed: int = 3) -> ExperimentResult:
    """Cotree outcome fold and pairing construction agree with exhaustive search."""
    rng = random.Random(seed)
    res = ExperimentResult("cograph-oracle")
    for _ in range(cases):
        e = en.random_cotree(rng.randint(1, max_leaves), rng)
        g = cotree_to_graph(e)
        res.cases += 1
        fast, slow = cograph_outcome(e), outcome(g)
        p = cograph_pairing(e)
        problems = []
        if fast != slow:
            problems.append(f"fold {fast.name} vs exact {slow.name}")
        if (slow is Outcome.D) != (p is not None):
            problems.append("pairing presence disagrees with outcome D")
        if p is not None and not is_pairing_dominating_set(g, p):
            problems.append("pairing does not verify")
        rec = recognize_cograph(g)
        if rec is None or cograph_outcome(rec) != slow:
            problems.append("recognition lost the outcome")
        if problems:
            res.failures.append({"cotree": str(e), "problems": problems})
    return res


@_timed
def tree_oracle(max_n: int = 10) -> ExperimentResult:
    """On every free tree: reduction outcome = exact outcome, and D iff a perfect matching exists."""
    res = ExperimentResult("tree-oracle")
    for n in range(1, max_n + 1):
        for t in en.free_trees(n):
            res.cases += 1
            problems = []
            try:
                classify_irreducible_tree(reduce_pendant_p2(t).tree)
                fast = tree_outcome(t)
            except InternalConsistencyError as exc:
                res.failures.append({"graph": t.to_dict(), "problems": [str(exc)]})
                continue
            slow = outcome(t)
            if fast != slow:
                problems.append(f"reduction {fast.name} vs exact {slow.name}")
            m = pairing_from_tree_matching(t)
            if (fast is Outcome.D) != (m is not None):
                problems.append("perfect matching presence disagrees with outcome D")
            if m is not None and not is_pairing_dominating_set(t, m):
                problems.append("matching is not a pairing dominating set")
            if problems:
                res.failures.append({"graph": t.to_dict(), "problems": problems})
    return res


@_timed
def reduction_equiv(max_vars: int = 3, max_clauses: int = 3) -> ExperimentResult:
    """POS-CNF winner equals graph winner for the same mover, on both constructions."""
    res = ExperimentResult("reduction-equiv")
    formulas = list(en.poscnf_family(max_vars, max_clauses)) + [REFERENCE_FORMULA]
    for f in formulas:
        res.cases += 1
        for build in (poscnf_to_graph, poscnf_to_split_graph):
            g, _ = build(f)
            start = Position.start(g)
            for first in Player:
                want = solve_poscnf(f, first)
                got = solve_position(start, first).winner
                if want != got:
                    res.failures.append(
                        {"formula": f.to_text(), "build": build.__name__,
                         "first": first.value, "formula_winner": want.value, "graph_winner": got.value}
                    )  # fmt: skip
    return res


@_timed
def threesat_equiv(count: int = 24, seed: int = 0) -> ExperimentResult:
    """Satisfiable iff the gadget graph has a pairing; both translations round-trip."""
    res = ExperimentResult("threesat-equiv")
    unsat = 0
    for f in en.threesat_fixtures(count, seed):
        res.cases += 1
        g, _ = threesat_to_pairing_graph(f)
        a = sat_brute_force(f)
        p = find_pairing_exact(g)
        problems = []
        if (a is None) != (p is None):
            problems.append("satisfiability and pairing existence disagree")
        if a is None:
            unsat += 1
        else:
            if not is_pairing_dominating_set(g, assignment_to_pairing(f, a)):
                problems.append("assignment_to_pairing does not verify")
        if p is not None and not f.satisfied_by(pairing_to_assignment(f, p)):
            problems.append("pairing_to_assignment does not satisfy")
        if problems:
            res.failures.append({"formula": f.to_dimacs(), "problems": problems})
    res.details["unsatisfiable"] = unsat
    return res


@_timed
def neutrality(
    sizes: tuple[int, ...] = (2, 3, 4, 5), cases: int = 50, max_n: int = 7, seed: int = 4
) -> ExperimentResult:
    """Hanging split graphs are neutral: gluing them anywhere keeps the outcome."""
    rng = random.Random(seed)
    res = ExperimentResult("neutrality")
    for k in sizes:
        h = hanging_split(k)
        res.cases += 1
        h_minus, _ = h.remove_vertex(0)
        if outcome(h) is not Outcome.N or outcome(h_minus) is not Outcome.D or not is_neutral(h, 0):
            res.failures.append({"hanging_split": k, "error": "characterization fails"})
        for _ in range(cases):
            g = en.random_graph(rng.randint(1, max_n), rng, rng.uniform(0.2, 0.8))
            u = rng.randrange(g.n)
            res.cases += 1
            glued = glue(g, u, h, 0).graph
            before, after = outcome(g), outcome(glued)
            if before != after:
                res.failures.append(
                    {"graph": g.to_dict(), "u": u, "hanging_split": k,
                     "before": before.name, "after": after.name}
                )  # fmt: skip
    return res


@_timed
def reference_graphs() -> ExperimentResult:
    """Reference graphs: P4 is D, P3 is N, the double star is S."""
    res = ExperimentResult("reference-graphs")
    for name, g, want in (("P4", P4, Outcome.D), ("P3", P3, Outcome.N), ("double star", DOUBLE_STAR, Outcome.S)):
        res.cases += 1
        got = outcome(g)
        if got is not want:
            res.failures.append({"graph": name, "want": want.name, "got": got.name})
    return res


EXPERIMENTS: dict[str, Callable[..., ExperimentResult]] = {
    "no-p": no_p,
    "monotonicity": monotonicity,
    "es-soundness": es_soundness,
    "pairing-soundness": pairing_soundness,
    "cograph-oracle": cograph_oracle,
    "tree-oracle": tree_oracle,
    "reduction-equiv": reduction_equiv,
    "threesat-equiv": threesat_equiv,
    "neutrality": neutrality,
    "reference-graphs": reference_graphs,
}

