# %% [markdown]
# # When is the stack almost (very) good?
#
# The margin is dim(I - I^1) - 1 - dim Bun: negative means almost very good,
# zero almost good only, positive neither.

# %%
from collections import Counter

from parabolic_goodness import WeightType, check_g0, check_g1, decide, iter_grid, validate
from parabolic_goodness.core import nontrivial_points


def show(rank, rows, weights, g):
    a = validate(rank, rows, WeightType(weights))
    v = decide(a, g)
    print(f"g={g} {a!s:<22} {v.classification.value:<17} margin={v.margin}")


show(2, [], (), 0)
show(2, [[1], [1], [1]], (2, 2, 2), 0)
show(2, [[1], [1], [1], [1]], (2, 2, 2, 2), 0)
show(2, [], (), 1)
show(2, [[1]], (2,), 1)
show(2, [[1], [1]], (2, 2), 1)
show(2, [], (), 2)

# %% [markdown]
# Genus 1: group the grid by the number of points whose flag has a proper
# nonzero subspace.

# %%
table = Counter()
for a in iter_grid(3, 2, 3):
    table[nontrivial_points(a), decide(a, 1).classification.value] += 1
for key in sorted(table):
    print(key, table[key])

# %% [markdown]
# The genus-specific forms of the criterion agree with the general one.

# %%
a = validate(3, [[2, 1], [1]], WeightType((3, 2)))
print(check_g0(a), decide(a, 0).flags)
print(check_g1(a), decide(a, 1).flags)
