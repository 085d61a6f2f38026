# %% [markdown]
# # Decompositions into positive-rank parts
#
# Every stack dimension below is a maximum over multisets of dimension
# vectors summing to alpha.  The enumerator yields each multiset once, with
# parts sorted in non-increasing (rank, flags) order.

# %%
from parabolic_goodness import WeightType, count_decompositions, decompositions, validate

wt = WeightType((2, 2))
alpha = validate(2, [[1], [1]], wt)
for d in decompositions(alpha):
    print(d.t, d)

# %% [markdown]
# Counts grow quickly with rank and flag data.

# %%
wt3 = WeightType((3, 3, 3))
for rank in range(1, 5):
    a = validate(rank, [[rank // 2, rank // 4]] * 3, wt3)
    print(a, count_decompositions(a), "decompositions,", count_decompositions(a, 2), "with >= 2 parts")

# %% [markdown]
# The stream is lazy, so a consumer can stop early.

# %%
big = validate(8, [[4, 2], [5, 1], [3, 3]], wt3)
stream = decompositions(big, min_parts=3)
print([str(next(stream)) for _ in range(3)])
