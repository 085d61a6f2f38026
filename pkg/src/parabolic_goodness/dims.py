"""Dimensions of the stacks attached to a dimension vector on a genus ``g`` curve.

Besides ``Bun`` itself, each dimension is the maximum of a closed-form
expression over decompositions of the dimension vector:

* nilpotent pairs ``N``:    ``g * sum(b_0^2) - sum(q(b))`` over ``t >= 1`` parts
* all pairs ``P``:          ``t + g * sum(b_0^2) - sum(q(b))`` over ``t >= 1``
* non-scalar inertia:       same objective over ``t >= 2``

The grouping of parts by eigenvalue only enters through the number of
groups, which is largest when every part is its own group, hence the
flattened count ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import DimVector, ZeroRank, q
from .decomp import Decomposition, decompositions


@dataclass(frozen=True)
class DimResult:
    """A maximum with its first maximizing decomposition; both None if empty."""

    value: int | None
    witness: Decomposition | None

    @property
    def empty(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class StackDims:
    genus: int
    dim_bun: int
    dim_nilp: DimResult
    dim_pairs: DimResult
    dim_inertia_excess: DimResult


def dim_bun(a: DimVector, g: int) -> int:
    return g * a.rank**2 - q(a)


def nilpotent_objective(d: Decomposition, g: int) -> int:
    return sum(g * b.rank**2 - q(b) for b in d.parts)


def pairs_objective(d: Decomposition, g: int) -> int:
    return d.t + nilpotent_objective(d, g)


def _check(a: DimVector, g: int) -> None:
    if a.rank < 1:
        raise ZeroRank("dimension vector must have positive rank")
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")


def _maximize(
    a: DimVector, g: int, objective: Callable[[Decomposition, int], int], min_parts: int
) -> DimResult:
    best: int | None = None
    witness = None
    for d in decompositions(a, min_parts):
        val = objective(d, g)
        if best is None or val > best:
            best, witness = val, d
    return DimResult(best, witness)


def dim_nilpotent_stack(a: DimVector, g: int) -> DimResult:
    _check(a, g)
    return _maximize(a, g, nilpotent_objective, 1)


def dim_pairs_stack(a: DimVector, g: int) -> DimResult:
    _check(a, g)
    return _maximize(a, g, pairs_objective, 1)


def dim_inertia_excess(a: DimVector, g: int) -> DimResult:
    """Dimension of the inertia stack minus its scalar part; None for rank 1."""
    _check(a, g)
    return _maximize(a, g, pairs_objective, 2)


def stack_dims(a: DimVector, g: int) -> StackDims:
    """All four dimensions from a single pass over the decompositions."""
    _check(a, g)
    nilp = pairs = excess = None
    for d in decompositions(a):
        n = nilpotent_objective(d, g)
        pr = n + d.t
        if nilp is None or n > nilp.value:
            nilp = DimResult(n, d)
        if pairs is None or pr > pairs.value:
            pairs = DimResult(pr, d)
        if d.t >= 2 and (excess is None or pr > excess.value):
            excess = DimResult(pr, d)
    return StackDims(
        genus=g,
        dim_bun=dim_bun(a, g),
        dim_nilp=nilp,
        dim_pairs=pairs,
        dim_inertia_excess=excess or DimResult(None, None),
    )
