# %% [markdown]
# # Stack dimensions
#
# For a genus g curve we compute dim Bun, the nilpotent-pairs stack, the
# pairs stack and the non-scalar inertia, each with a maximizing
# decomposition.

# %%
from parabolic_goodness import WeightType, stack_dims, validate

wt = WeightType(())
alpha = validate(2, [], wt)
for g in range(4):
    dims = stack_dims(alpha, g)
    print(
        f"g={g}: bun={dims.dim_bun:>3} nilp={dims.dim_nilp.value:>3} "
        f"pairs={dims.dim_pairs.value:>3} inertia-excess={dims.dim_inertia_excess.value:>3} "
        f"witness={dims.dim_inertia_excess.witness}"
    )

# %% [markdown]
# A line bundle has no non-scalar automorphisms: the inertia excess is empty.

# %%
print(stack_dims(validate(1, [], wt), 3).dim_inertia_excess)
