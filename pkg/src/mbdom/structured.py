"""Polynomial outcome computation for cographs and forests.

Cographs fold over their cotree with the union and join rules. Trees are
shrunk by deleting pendant P2's (gluing a P3, which never changes the
outcome) until a P2-irreducible core remains; the core's shape decides.
"""

from __future__ import annotations

import random
from enum import Enum
from functools import reduce
from typing import NamedTuple

from .cotree import Cotree, Kind, cotree_to_graph, recognize_cograph
from .errors import InternalConsistencyError
from .game import DEFAULT_MAX_N, Outcome, outcome
from .graph import Graph
from .pairing import Pairing

# -- outcome algebra ---------------------------------------------------


def union_outcome(a: Outcome, b: Outcome) -> Outcome:
    if a is Outcome.S or b is Outcome.S:
        return Outcome.S
    if a is Outcome.N and b is Outcome.N:
        return Outcome.S
    if a is Outcome.D and b is Outcome.D:
        return Outcome.D
    return Outcome.N


def join_outcome(g_size: int, a: Outcome, h_size: int, b: Outcome) -> Outcome:
    if g_size < 1 or h_size < 1:
        raise ValueError("join operands must be non-empty")
    if (g_size == 1 and b is Outcome.S) or (h_size == 1 and a is Outcome.S):
        return Outcome.N
    return Outcome.D


def cograph_outcome(e: Cotree) -> Outcome:
    if e.kind is Kind.LEAF:
        return Outcome.N
    outs = [cograph_outcome(c) for c in e.children]
    if e.kind is Kind.UNION:
        return reduce(union_outcome, outs)
    size, acc = e.children[0].size, outs[0]
    for child, out in zip(e.children[1:], outs[1:]):
        acc = join_outcome(size, acc, child.size, out)
        size += child.size
    return acc


def cograph_pairing(e: Cotree) -> Pairing | None:
    """Pairing dominating set of ``cotree_to_graph(e)``, present iff its outcome is D."""
    pairs = _cograph_pairs(e.relabeled())
    return None if pairs is None else Pairing(pairs)


def _cograph_pairs(e: Cotree) -> list[tuple[int, int]] | None:
    # leaves carry their vertex index in `label`
    if e.kind is Kind.LEAF:
        return None
    if e.kind is Kind.UNION:
        out = []
        for c in e.children:
            sub = _cograph_pairs(c)
            if sub is None:
                return None
            out.extend(sub)
        return out

    leaves = [c for c in e.children if c.kind is Kind.LEAF]
    if len(leaves) >= 2:
        # two universal vertices: their common neighborhood is everything
        return [(leaves[0].label, leaves[1].label)]
    big = [c for c in e.children if c.kind is not Kind.LEAF]
    if len(big) >= 2 or len(e.children) >= 3:
        # split the children into two groups of >= 2 vertices and take two
        # vertices from each side
        side_a = big[0].leaf_labels()
        side_b = [lab for c in e.children if c is not big[0] for lab in c.leaf_labels()]
        return [(side_a[0], side_a[1]), (side_b[0], side_b[1])]

    # join of a single vertex x with a non-leaf cograph h
    x = leaves[0].label
    h = big[0]
    h_out = cograph_outcome(h)
    if h_out is Outcome.D:
        return _cograph_pairs(h)
    if h_out is Outcome.S:
        return None
    if h.kind is Kind.JOIN:
        # an N join is a single vertex y joined with an S graph; x, y are universal
        y = next(c for c in h.children if c.kind is Kind.LEAF)
        return [(x, y.label)]
    # an N union: one N child, all others D
    n_child = next(c for c in h.children if cograph_outcome(c) is Outcome.N)
    out = []
    for c in h.children:
        if c is not n_child:
            out.extend(_cograph_pairs(c))
    sub = _cograph_pairs(Cotree.join(Cotree.leaf(x), n_child))
    if sub is None:
        raise InternalConsistencyError("join of a vertex with an N cograph is not D")
    return out + sub


# -- trees -------------------------------------------------------------


class IrreducibleTreeClass(Enum):
    K1 = "K1"
    P2 = "P2"
    STAR = "Star"
    TWO_SUPPORT = "TwoSupport"


class PendantReduction(NamedTuple):
    tree: Graph
    removed: tuple[tuple[int, int], ...]  # (leaf, its neighbor) in original numbering
    mapping: tuple[int, ...]  # original index of each surviving vertex


def _pendant_p2s(adj: dict[int, set[int]]) -> list[tuple[int, int]]:
    out = []
    for x in sorted(adj):
        if len(adj[x]) == 1:
            (y,) = adj[x]
            if len(adj[y]) == 2:
                out.append((x, y))
    return out


def reduce_pendant_p2(t: Graph, rng: random.Random | None = None) -> PendantReduction:
    """Strip pendant P2's (a leaf whose neighbor has degree 2) until none is left.

    Removes the smallest such leaf first, or a random one when ``rng`` is given.
    """
    if not t.is_tree():
        raise ValueError("input is not a tree")
    adj = {v: set(t.adjacency[v]) for v in range(t.n)}
    removed = []
    while True:
        cands = _pendant_p2s(adj)
        if not cands:
            break
        x, y = rng.choice(cands) if rng is not None else cands[0]
        for z in (x, y):
            for w in adj.pop(z):
                if w in adj:
                    adj[w].discard(z)
        removed.append((x, y))
    core, mapping = t.induced_subgraph(adj)
    return PendantReduction(core, tuple(removed), mapping)


def classify_irreducible_tree(t: Graph) -> IrreducibleTreeClass:
    if not t.is_tree():
        raise ValueError("input is not a tree")
    adj = {v: set(t.adjacency[v]) for v in range(t.n)}
    if _pendant_p2s(adj):
        raise ValueError("tree still has a pendant P2")
    if t.n == 1:
        return IrreducibleTreeClass.K1
    if t.n == 2:
        return IrreducibleTreeClass.P2
    if t.n >= 4 and max(t.degree(v) for v in range(t.n)) == t.n - 1:
        return IrreducibleTreeClass.STAR
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    supports = [v for v in range(t.n) if len(t.adjacency[v] & leaves) >= 2]
    if len(supports) >= 2:
        return IrreducibleTreeClass.TWO_SUPPORT
    raise InternalConsistencyError(f"P2-irreducible tree fits no class: {t!r}")


_CLASS_OUTCOME = {
    IrreducibleTreeClass.P2: Outcome.D,
    IrreducibleTreeClass.K1: Outcome.N,
    IrreducibleTreeClass.STAR: Outcome.N,
    IrreducibleTreeClass.TWO_SUPPORT: Outcome.S,
}


def tree_outcome(t: Graph) -> Outcome:
    """Outcome of a tree; forests combine their components with ``union_outcome``."""
    if not t.is_forest():
        raise ValueError("input is not a forest")
    result = Outcome.D
    for comp in t.components():
        sub, _ = t.induced_subgraph(comp)
        core = reduce_pendant_p2(sub).tree
        result = union_outcome(result, _CLASS_OUTCOME[classify_irreducible_tree(core)])
    return result


# -- dispatch and neutrality -------------------------------------------


def structured_outcome(g: Graph, *, max_n: int | None = DEFAULT_MAX_N) -> tuple[Outcome, str]:
    """Outcome plus the engine used: forest first, then cograph, then exact search."""
    if g.n > 0 and g.is_forest():
        return tree_outcome(g), "tree"
    cotree = recognize_cograph(g)
    if cotree is not None:
        return cograph_outcome(cotree), "cograph"
    return outcome(g, max_n=max_n), "exact"


def is_neutral(h: Graph, v: int, *, max_n: int | None = DEFAULT_MAX_N) -> bool:
    """Whether gluing ``(h, v)`` onto any graph preserves its outcome.

    Tested through the characterization o(h) = N and o(h - v) = D.
    """
    h.check_vertex(v)
    if structured_outcome(h, max_n=max_n)[0] is not Outcome.N:
        return False
    rest, _ = h.remove_vertex(v)
    if rest.n == 0:
        return True
    return structured_outcome(rest, max_n=max_n)[0] is Outcome.D


__all__ = [
    "IrreducibleTreeClass",
    "PendantReduction",
    "classify_irreducible_tree",
    "cograph_outcome",
    "cograph_pairing",
    "cotree_to_graph",
    "is_neutral",
    "join_outcome",
    "reduce_pendant_p2",
    "structured_outcome",
    "tree_outcome",
    "union_outcome",
]
