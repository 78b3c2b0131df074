"""Instance generators from POS-CNF and 3-SAT, with brute-force oracles.

* ``poscnf_to_graph``: one vertex per variable, two twin vertices per clause,
  variable adjacent to both twins of every clause containing it. Prover
  wins the formula game iff Dominator wins the graph game (same mover).
* ``threesat_to_pairing_graph``: a seven-vertex gadget per variable plus a
  vertex per clause. The graph has a pairing dominating set iff the formula
  is satisfiable, and ``assignment_to_pairing`` / ``pairing_to_assignment``
  translate between witnesses.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalConsistencyError, ParseError, SizeCapError
from .game import Player, Winner
from .graph import Graph
from .pairing import Pairing, is_pairing_dominating_set

POSCNF_MAX_VARS = 12
SAT_MAX_VARS = 20


@dataclass(frozen=True)
class ReductionMap:
    """Which graph vertices stand for which variables and clauses (1-based keys)."""

    variables: dict[int, object]
    clauses: dict[int, object]
    notes: dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "vars": {str(k): v for k, v in self.variables.items()},
            "clauses": {str(k): v for k, v in self.clauses.items()},
        }
        out.update(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- POS-CNF -----------------------------------------------------------


@dataclass(frozen=True)
class PosCnfFormula:
    """Positive CNF over variables ``0..num_vars-1``.

    If some variable occurs in no clause, the constructor appends the clause
    containing every variable; ``catch_all_added`` records that.
    """

    num_vars: int
    clauses: tuple[frozenset[int], ...]
    catch_all_added: bool = False

    def __init__(self, num_vars: int, clauses: Sequence[Sequence[int]]):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        cls_ = []
        for c in clauses:
            c = frozenset(c)
            if not c:
                raise ValueError("empty clause")
            if any(not 0 <= x < num_vars for x in c):
                raise ValueError(f"clause {sorted(c)} mentions an unknown variable")
            cls_.append(c)
        used = frozenset().union(*cls_) if cls_ else frozenset()
        added = len(used) < num_vars
        if added:
            cls_.append(frozenset(range(num_vars)))
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "clauses", tuple(cls_))
        object.__setattr__(self, "catch_all_added", added)

    def satisfied_by(self, prover: int) -> bool:
        """Whether the variables in bitmask ``prover`` (set true) satisfy every clause."""
        return all(any(prover >> x & 1 for x in c) for c in self.clauses)

    def to_text(self) -> str:
        lines = [f"p poscnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(str(x + 1) for x in sorted(c)) for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_poscnf(text: str) -> PosCnfFormula:
    """``p poscnf n m`` then one clause per line as 1-based variable indices; ``c`` lines are comments."""
    header = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 4 or parts[:2] != ["p", "poscnf"]:
                raise ParseError("expected header 'p poscnf n m'", line=lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer in header", line=lineno) from None
            continue
        try:
            lits = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"non-integer in clause {line!r}", line=lineno) from None
        if any(not 1 <= x <= header[0] for x in lits):
            raise ParseError(f"variable out of range 1..{header[0]}", line=lineno)
        clauses.append([x - 1 for x in lits])
    if header is None:
        raise ParseError("missing header 'p poscnf n m'", line=1)
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return PosCnfFormula(header[0], clauses)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def solve_poscnf(f: PosCnfFormula, first: Player) -> Winner:
    """Brute-force winner of the POS-CNF game.

    Prover plays Dominator's role (his variables become true), Disprover plays
    Staller's. Prover wins once every clause holds a Prover variable and loses
    once some clause is entirely Disprover's.
    """
    if f.num_vars > POSCNF_MAX_VARS:
        raise SizeCapError(f"{f.num_vars} variables exceed the cap of {POSCNF_MAX_VARS}")
    n = f.num_vars
    clause_masks = [sum(1 << x for x in c) for c in f.clauses]
    memo: dict[tuple[int, int, bool], bool] = {}

    def prover_wins(pro: int, dis: int, prover_to_move: bool) -> bool:
        key = (pro, dis, prover_to_move)
        if key in memo:
            return memo[key]
        if all(m & pro for m in clause_masks):
            res = True
        elif any(m & dis == m for m in clause_masks):
            res = False
        else:
            free = [1 << x for x in range(n) if not (pro | dis) >> x & 1]
            if prover_to_move:
                res = any(prover_wins(pro | b, dis, False) for b in free)
            else:
                res = all(prover_wins(pro, dis | b, True) for b in free)
        memo[key] = res
        return res

    won = prover_wins(0, 0, first is Player.DOMINATOR)
    return Winner.DOMINATOR_WINS if won else Winner.STALLER_WINS


def poscnf_to_graph(f: PosCnfFormula) -> tuple[Graph, ReductionMap]:
    """Variables ``0..n-1``; clause ``j`` becomes twins ``n+2j`` and ``n+2j+1``."""
    n = f.num_vars
    edges = []
    clause_map = {}
    for j, c in enumerate(f.clauses):
        c0, c1 = n + 2 * j, n + 2 * j + 1
        clause_map[j + 1] = [c0, c1]
        for x in c:
            edges += [(x, c0), (x, c1)]
    g = Graph.from_edges(n + 2 * len(f.clauses), edges)
    notes = {"catch_all_clause": len(f.clauses) if f.catch_all_added else None}
    return g, ReductionMap({i + 1: i for i in range(n)}, clause_map, notes)


def poscnf_to_split_graph(f: PosCnfFormula) -> tuple[Graph, ReductionMap]:
    """As ``poscnf_to_graph`` with the variable vertices made into a clique."""
    g, rmap = poscnf_to_graph(f)
    n = f.num_vars
    clique = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(g.n, g.edges + tuple(clique)), rmap


# -- 3-SAT -------------------------------------------------------------

Literal = int  # DIMACS style: +k / -k for variable k (1-based)
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class ThreeSatFormula:
    """Clauses of exactly three literals on three distinct variables.

    Every variable must occur both positively and negatively.
    """

    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self) -> None:
        pos, neg = set(), set()
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have three literals")
            if any(lit == 0 or abs(lit) > self.num_vars for lit in c):
                raise ValueError(f"clause {c} mentions an unknown variable")
            if len({abs(lit) for lit in c}) != 3:
                raise ValueError(f"clause {c} repeats a variable")
            for lit in c:
                (pos if lit > 0 else neg).add(abs(lit))
        missing = [v for v in range(1, self.num_vars + 1) if v not in pos or v not in neg]
        if missing:
            raise ValueError(f"variables {missing} do not occur with both signs")

    @classmethod
    def of(cls, num_vars: int, clauses) -> ThreeSatFormula:
        return cls(num_vars, tuple(tuple(c) for c in clauses))

    def satisfied_by(self, a: Sequence[bool]) -> bool:
        return all(any(a[abs(lit) - 1] == (lit > 0) for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(str(lit) for lit in c) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> ThreeSatFormula:
    header = None
    tokens: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected header 'p cnf n m'", line=lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer in header", line=lineno) from None
            continue
        if header is None:
            raise ParseError("clause before header", line=lineno)
        for tok in line.split():
            try:
                tokens.append((int(tok), lineno))
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", line=lineno) from None
    if header is None:
        raise ParseError("missing header 'p cnf n m'", line=1)
    clauses, cur = [], []
    for lit, lineno in tokens:
        if lit == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(lit)
    if cur:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return ThreeSatFormula(header[0], tuple(clauses))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def sat_brute_force(f: ThreeSatFormula) -> Assignment | None:
    """First satisfying assignment in lexicographic order (False before True)."""
    if f.num_vars > SAT_MAX_VARS:
        raise SizeCapError(f"{f.num_vars} variables exceed the cap of {SAT_MAX_VARS}")
    for a in itertools.product((False, True), repeat=f.num_vars):
        if f.satisfied_by(a):
            return a
    return None


# gadget slots: two triangles x-y-z and x'-y'-z', t adjacent to x and x'
_SLOTS = ("x", "y", "z", "xp", "yp", "zp", "t")
X, Y, Z, XP, YP, ZP, T = range(7)


def gadget_vertex(i: int, slot: int) -> int:
    """Vertex of ``slot`` in the gadget of variable ``i`` (0-based)."""
    return 7 * i + slot


def threesat_to_pairing_graph(f: ThreeSatFormula) -> tuple[Graph, ReductionMap]:
    """Gadget of variable ``i`` uses ``7i..7i+6``; clause ``j`` is vertex ``7n+j``."""
    n = f.num_vars
    edges = []
    variables = {}
    for i in range(n):
        x, y, z, xp, yp, zp, t = (gadget_vertex(i, s) for s in range(7))
        edges += [(x, y), (y, z), (z, x), (xp, yp), (yp, zp), (zp, xp), (t, x), (t, xp)]
        variables[i + 1] = {s: gadget_vertex(i, k) for k, s in enumerate(_SLOTS)}
    clauses = {}
    for j, c in enumerate(f.clauses):
        cj = 7 * n + j
        clauses[j + 1] = cj
        for lit in c:
            i = abs(lit) - 1
            a, b = (X, Y) if lit > 0 else (XP, YP)
            edges += [(cj, gadget_vertex(i, a)), (cj, gadget_vertex(i, b))]
    return Graph.from_edges(7 * n + len(f.clauses), edges), ReductionMap(variables, clauses)


def _gadget_form(i: int, value: bool) -> list[tuple[int, int]]:
    v = lambda s: gadget_vertex(i, s)  # noqa: E731
    if value:
        return [(v(X), v(Y)), (v(T), v(XP)), (v(YP), v(ZP))]
    return [(v(XP), v(YP)), (v(T), v(X)), (v(Y), v(Z))]


def assignment_to_pairing(f: ThreeSatFormula, a: Sequence[bool]) -> Pairing:
    """Pairs ``(x,y), (t,x'), (y',z')`` for a true variable, the mirror image for a false one."""
    if len(a) != f.num_vars or not f.satisfied_by(a):
        raise ValueError("assignment does not satisfy the formula")
    return Pairing(p for i, val in enumerate(a) for p in _gadget_form(i, bool(val)))


def pairing_to_assignment(f: ThreeSatFormula, p: Pairing) -> Assignment:
    """Normalize a pairing dominating set of the gadget graph and read off an assignment.

    Gadget by gadget, the pair dominating ``t`` fixes the orientation: ``(t,x')``
    or ``(x,x')`` gives the true form, ``(t,x)`` the false form. All pairs
    touching the gadget are then swapped for that form; the pairing is
    re-verified after each step. Leftover pairs that touch no gadget are
    dropped. Variable ``i`` is true iff ``(x_i, y_i)`` is a pair.
    """
    g, _ = threesat_to_pairing_graph(f)
    if not is_pairing_dominating_set(g, p):
        raise ValueError("not a pairing dominating set of the gadget graph")
    pairs = set(p.pairs)
    for i in range(f.num_vars):
        gadget = set(range(7 * i, 7 * i + 7))
        t, x, xp = (gadget_vertex(i, s) for s in (T, X, XP))
        if (min(t, xp), max(t, xp)) in pairs or (min(x, xp), max(x, xp)) in pairs:
            value = True
        elif (min(t, x), max(t, x)) in pairs:
            value = False
        else:
            raise InternalConsistencyError(f"t of gadget {i + 1} is not pairing dominated")
        pairs = {q for q in pairs if not (set(q) & gadget)}
        pairs.update(_gadget_form(i, value))
        if not is_pairing_dominating_set(g, Pairing(pairs)):
            raise InternalConsistencyError(f"rewriting gadget {i + 1} broke the pairing")
    gadget_vertices = 7 * f.num_vars
    pairs = {q for q in pairs if q[0] < gadget_vertices or q[1] < gadget_vertices}
    if not is_pairing_dominating_set(g, Pairing(pairs)):
        raise InternalConsistencyError("dropping clause-clause pairs broke the pairing")
    a = tuple((gadget_vertex(i, X), gadget_vertex(i, Y)) in pairs for i in range(f.num_vars))
    if not f.satisfied_by(a):
        raise InternalConsistencyError("normalized pairing yields a non-satisfying assignment")
    return a
