# %% [markdown]
# # Formulas as graphs
#
# The positive CNF game turns into a domination game on a bipartite graph,
# and 3-SAT turns into the question of whether a pairing dominating set exists.

# %%
from mbdom.game import Player, Position, solve_position
from mbdom.pairing import find_pairing_exact, is_pairing_dominating_set
from mbdom.reductions import (
    PosCnfFormula,
    ThreeSatFormula,
    assignment_to_pairing,
    pairing_to_assignment,
    poscnf_to_graph,
    poscnf_to_split_graph,
    sat_brute_force,
    solve_poscnf,
    threesat_to_pairing_graph,
)

# %% [markdown]
# ## POS-CNF
#
# (X1 v X2) & (X1 v X4) & (X2 v X3 v X4), variables 0-based in code.

# %%
f = PosCnfFormula(4, [(0, 1), (0, 3), (1, 2, 3)])
for build in (poscnf_to_graph, poscnf_to_split_graph):
    g, rmap = build(f)
    print(build.__name__, g.n, "vertices", g.edge_count, "edges", rmap.to_dict()["clauses"])
    for first in Player:
        print(f"   {first.value} first: formula {solve_poscnf(f, first).value}, "
              f"graph {solve_position(Position.start(g), first).winner.value}")  # fmt: skip

# %% [markdown]
# ## 3-SAT
#
# Each variable gets a seven-vertex gadget; each clause a single vertex.

# %%
sat = ThreeSatFormula.of(3, [(1, 2, 3), (-1, -2, -3)])
g, _ = threesat_to_pairing_graph(sat)
a = sat_brute_force(sat)
p = assignment_to_pairing(sat, a)
print("assignment", a, "->", len(p), "pairs, valid:", is_pairing_dominating_set(g, p))
found = find_pairing_exact(g)
print("search found", len(found), "pairs, read back as", pairing_to_assignment(sat, found))

# %% [markdown]
# All eight sign patterns on three variables make an unsatisfiable formula,
# and the gadget graph has no pairing.

# %%
from mbdom.enumeration import all_sign_patterns

unsat = all_sign_patterns()
print(sat_brute_force(unsat), find_pairing_exact(threesat_to_pairing_graph(unsat)[0]))
