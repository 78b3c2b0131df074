# %% [markdown]
# # Cographs, trees and neutral gadgets
#
# Two graph classes can be decided without game-tree search.

# %%
from mbdom.cotree import cotree_to_graph, parse_cotree
from mbdom.enumeration import free_trees
from mbdom.game import Outcome, outcome
from mbdom.graph import glue, hanging_split, path
from mbdom.structured import (
    classify_irreducible_tree,
    cograph_outcome,
    cograph_pairing,
    is_neutral,
    reduce_pendant_p2,
    tree_outcome,
    union_outcome,
)

# %% [markdown]
# ## Disjoint unions
#
# `S` absorbs everything, `D` changes nothing, and two `N` parts make `S`.

# %%
names = [Outcome.D, Outcome.N, Outcome.S]
print("    " + "  ".join(o.name for o in names))
for a in names:
    print(a.name, "  " + "  ".join(union_outcome(a, b).name for b in names))

# %% [markdown]
# ## Cographs from their cotree

# %%
for text in ("J(.,U(.,.))", "J(U(.,.),U(.,.))", "U(J(.,.),J(.,.,.))", "J(.,U(.,.),U(.,.))"):
    e = parse_cotree(text)
    g = cotree_to_graph(e)
    print(f"{text:22s} fold {cograph_outcome(e).name}  exact {outcome(g).name}  pairing {cograph_pairing(e)}")

# %% [markdown]
# ## Trees
#
# Strip pendant P2s until none is left, then read the answer off the core.

# %%
for n in (6, 7):
    for t in free_trees(n):
        core = reduce_pendant_p2(t).tree
        print(n, sorted(t.degree_sequence(), reverse=True),
              classify_irreducible_tree(core).value, tree_outcome(t).name)  # fmt: skip

# %% [markdown]
# ## Neutral gadgets
#
# A hanging split graph glued at its distinguished vertex leaves any outcome
# unchanged.

# %%
h = hanging_split(3)
print("neutral:", is_neutral(h, 0))
for g in (path(3), path(4), path(5)):
    glued = glue(g, 1, h, 0).graph
    print(f"P{g.n}: {outcome(g).name} -> glued {outcome(glued).name}")
