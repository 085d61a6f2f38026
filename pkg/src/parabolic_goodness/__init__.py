"""Decide the almost good / almost very good property for stacks of parabolic bundles."""

from .core import (
    DimVector,
    GenusTooLow,
    InvalidBounds,
    NotMonotone,
    ParabolicError,
    ShapeMismatch,
    SheafDatum,
    WeightType,
    WeightTypeMismatch,
    ZeroRank,
    chi_hom,
    euler_form,
    iter_dimvectors,
    iter_grid,
    iter_weight_types,
    p,
    q,
    sym_form,
    validate,
)
from .decomp import Decomposition, count_decompositions, decompositions
from .dims import (
    DimResult,
    StackDims,
    dim_bun,
    dim_inertia_excess,
    dim_nilpotent_stack,
    dim_pairs_stack,
    stack_dims,
)
from .goodness import Classification, Verdict, check_g0, check_g1, check_g_high, decide

__all__ = [
    "Classification",
    "Decomposition",
    "DimResult",
    "DimVector",
    "GenusTooLow",
    "InvalidBounds",
    "NotMonotone",
    "ParabolicError",
    "ShapeMismatch",
    "SheafDatum",
    "StackDims",
    "Verdict",
    "WeightType",
    "WeightTypeMismatch",
    "ZeroRank",
    "check_g0",
    "check_g1",
    "check_g_high",
    "chi_hom",
    "count_decompositions",
    "decide",
    "decompositions",
    "dim_bun",
    "dim_inertia_excess",
    "dim_nilpotent_stack",
    "dim_pairs_stack",
    "euler_form",
    "iter_dimvectors",
    "iter_grid",
    "iter_weight_types",
    "p",
    "q",
    "stack_dims",
    "sym_form",
    "validate",
]
