# %% [markdown]
# # Who wins the domination game?
#
# Dominator and Staller alternately claim vertices of a graph. Dominator wins
# if his vertices end up dominating the graph; Staller wins by claiming a whole
# closed neighborhood. A graph's outcome records who wins as a function of who
# moves first: `D` (Dominator always), `S` (Staller always) or `N` (whoever
# starts). The fourth combination never happens.

# %%
from mbdom.catalog import DOUBLE_STAR, P3, P4
from mbdom.enumeration import all_labeled_graphs
from mbdom.game import Outcome, Player, Position, analyze, es_sum_criterion, outcome, solve_position
from mbdom.graph import complete, cycle

for name, g in (("P4", P4), ("P3", P3), ("double star", DOUBLE_STAR)):
    rep = analyze(g)
    print(f"{name:12s} {rep.outcome.name}  {rep.outcome.caption}")

# %% [markdown]
# The solver also reports a winning opening for each player when there is one.
# On P3 Staller must take the center, while any opening wins for Dominator.

# %%
rep = analyze(P3)
print("Dominator first plays", rep.dominator_move, "| Staller first plays", rep.staller_move)

# %% [markdown]
# ## Following the engine through a game
#
# Let Staller open on C6 and let both sides follow `best_move`.

# %%
g = cycle(6)
pos, mover = Position.start(g), Player.STALLER
while pos.unplayed():
    sol = solve_position(pos, mover)
    print(f"{mover.value:9s} plays {sol.best_move}   (predicted: {sol.winner.value})")
    pos = pos.play(sol.best_move, mover)
    mover = mover.opponent
print("final outcome of C6:", outcome(g).name)

# %% [markdown]
# ## Outcome census on small graphs
#
# Every labeled graph on up to five vertices, split by outcome.

# %%
for n in range(1, 6):
    counts = {o.name: 0 for o in Outcome}
    for h in all_labeled_graphs(n):
        counts[outcome(h).name] += 1
    print(n, counts)

# %% [markdown]
# ## A counting shortcut
#
# When the weights `2^-(deg(u)+1)` sum below one half, Staller can never
# claim a full neighborhood, so the outcome is `D` without any search.

# %%
for n in (4, 6, 8):
    k = complete(n)
    print(f"K{n}: criterion {es_sum_criterion(k)}, outcome {outcome(k).name}")
