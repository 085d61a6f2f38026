# %% [markdown]
# # Dimension vectors and the Euler form
#
# A weight type lists the flag length at each marked point.  A dimension
# vector stores the rank and, per point, the dimensions of the proper flag
# pieces.

# %%
from parabolic_goodness import WeightType, euler_form, p, q, sym_form, validate

wt = WeightType((2, 2, 2, 2))
alpha = validate(2, [[1], [1], [1], [1]], wt)
print("alpha =", alpha)
print("q(alpha) =", q(alpha), " p(alpha) =", p(alpha))

# %% [markdown]
# Rank-one vectors always have q = 1, whatever the flags.

# %%
for rows in ([[0], [0], [0], [0]], [[1], [0], [1], [0]], [[1], [1], [1], [1]]):
    line = validate(1, rows, wt)
    print(line, "q =", q(line))

# %% [markdown]
# The form is not symmetric; its symmetrization is.

# %%
wt1 = WeightType((2,))
a, b = validate(1, [[1]], wt1), validate(1, [[0]], wt1)
print("<a,b> =", euler_form(a, b), " <b,a> =", euler_form(b, a), " (a,b) =", sym_form(a, b))

# %% [markdown]
# Invalid input is rejected when the vector is built.

# %%
try:
    validate(1, [[2]], wt1)
except ValueError as exc:
    print(type(exc).__name__, exc)
