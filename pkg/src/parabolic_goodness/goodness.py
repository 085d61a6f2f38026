"""Almost good / almost very good classification of parabolic bundle stacks.

The stack is almost good when the non-scalar inertia has dimension at most
``1 + dim Bun`` and almost very good when the inequality is strict; the
``1`` is the dimension of the scalar automorphisms every bundle carries.
``Verdict.margin`` is the signed difference ``dim(I - I^1) - 1 - dim Bun``.

``check_g0``, ``check_g1`` and ``check_g_high`` are separately coded
genus-specific forms of the same criterion, kept for cross-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import DimVector, GenusTooLow, ZeroRank, p
from .decomp import Decomposition, decompositions
from .dims import dim_bun, dim_inertia_excess

# dimension of the scalar automorphisms of any parabolic bundle
SCALAR_AUT_DIM = 1


class Classification(enum.Enum):
    ALMOST_VERY_GOOD = "almost-very-good"
    ALMOST_GOOD_ONLY = "almost-good-only"
    NOT_ALMOST_GOOD = "not-almost-good"

    @property
    def almost_good(self) -> bool:
        return self is not Classification.NOT_ALMOST_GOOD

    @property
    def almost_very_good(self) -> bool:
        return self is Classification.ALMOST_VERY_GOOD

    @classmethod
    def from_margin(cls, margin: int | None) -> Classification:
        if margin is None or margin < 0:
            return cls.ALMOST_VERY_GOOD
        if margin == 0:
            return cls.ALMOST_GOOD_ONLY
        return cls.NOT_ALMOST_GOOD


@dataclass(frozen=True)
class Verdict:
    classification: Classification
    margin: int | None
    witness: Decomposition | None

    @property
    def flags(self) -> tuple[bool, bool]:
        return self.classification.almost_good, self.classification.almost_very_good


def decide(a: DimVector, g: int) -> Verdict:
    excess = dim_inertia_excess(a, g)
    if excess.empty:
        return Verdict(Classification.ALMOST_VERY_GOOD, None, None)
    margin = excess.value - SCALAR_AUT_DIM - dim_bun(a, g)
    return Verdict(Classification.from_margin(margin), margin, excess.witness)


def _need_rank(a: DimVector) -> None:
    if a.rank < 1:
        raise ZeroRank("dimension vector must have positive rank")


def check_g0(a: DimVector) -> tuple[bool, bool]:
    """Genus 0: compare ``p(a)`` with ``sum p(b)`` over splittings into >= 2 parts.

    Returns ``(almost_good, almost_very_good)``.
    """
    _need_rank(a)
    worst = max((sum(p(b) for b in d.parts) for d in decompositions(a, 2)), default=None)
    if worst is None:
        return True, True
    return p(a) >= worst, p(a) > worst


def flag_cross_term(d: Decomposition) -> int:
    """``sum_{l != m} sum_{i,j} (b^l_{ij} - b^l_{i,j+1}) * b^m_{i,j+1}``."""
    total = 0
    parts = d.parts
    for i in range(d.weight_type.k):
        rows = [b.full_row(i) for b in parts]
        for l, rl in enumerate(rows):
            for m, rm in enumerate(rows):
                if l == m:
                    continue
                for j in range(len(rl) - 1):
                    total += (rl[j] - rl[j + 1]) * rm[j + 1]
    return total


def check_g1(a: DimVector) -> tuple[bool, bool]:
    """Genus 1: sign of ``1 - t + flag_cross_term`` at the minimizing splitting."""
    _need_rank(a)
    lowest = min((1 - d.t + flag_cross_term(d) for d in decompositions(a, 2)), default=None)
    if lowest is None:
        return True, True
    return lowest >= 0, lowest > 0


def check_g_high(a: DimVector, g: int) -> Classification:
    """Genus >= 2 needs no condition on the flags."""
    if g < 2:
        raise GenusTooLow(f"check_g_high needs g >= 2, got {g}")
    _need_rank(a)
    return Classification.ALMOST_VERY_GOOD
