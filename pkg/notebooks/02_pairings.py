# %% [markdown]
# # Pairing dominating sets
#
# If the vertices can be split into disjoint pairs `(u, v)` whose common
# closed neighborhoods `N[u] & N[v]` cover the graph, Dominator wins by
# answering each Staller move with its partner.

# %%
from mbdom.catalog import D_WITHOUT_PAIRING, PAIRING_EXAMPLE, PAIRING_EXAMPLE_PAIRS
from mbdom.game import outcome
from mbdom.graph import cycle, path
from mbdom.pairing import (
    Pairing,
    PairingStrategyState,
    find_pairing_exact,
    first_move_pairing,
    is_pairing_dominating_set,
    pairing_strategy_always_dominates,
    strategy_response,
)

p = Pairing(PAIRING_EXAMPLE_PAIRS)
print("pairs:", p.pairs, "covering:", is_pairing_dominating_set(PAIRING_EXAMPLE, p))
print("exhaustive check of the strategy:", pairing_strategy_always_dominates(PAIRING_EXAMPLE, p))

# %% [markdown]
# ## Playing the strategy by hand

# %%
state = PairingStrategyState(PAIRING_EXAMPLE, p)
for staller in (2, 8, 3):
    print(f"Staller {staller} -> Dominator {strategy_response(state, staller)}")

# %% [markdown]
# ## Sufficient but not necessary
#
# C5 and a ten-vertex graph are Dominator wins without any pairing.

# %%
for name, g in (("C5", cycle(5)), ("ten vertices", D_WITHOUT_PAIRING)):
    print(f"{name}: outcome {outcome(g).name}, pairing {find_pairing_exact(g)}")

# %% [markdown]
# ## Opening first
#
# On P5 there is no pairing, but after Dominator claims vertex 1 the rest
# has one, so he wins when he moves first.

# %%
print("P5 pairing:", find_pairing_exact(path(5)))
u, rest = first_move_pairing(path(5))
print("open on", u, "then answer with", rest.pairs, "| outcome", outcome(path(5)).name)
