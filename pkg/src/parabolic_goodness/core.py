"""Weight types, dimension vectors and the Euler form on them.

A dimension vector of weight type ``w = (w_1, ..., w_k)`` is stored as its
rank together with one row per marked point.  Row ``i`` holds the flag
dimensions ``alpha_{i1} >= ... >= alpha_{i,w_i-1}``; the two ends of the
flag (``alpha_{i0} = rank`` and ``alpha_{i,w_i} = 0``) are never stored.

All arithmetic is done with Python integers, so nothing can overflow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ParabolicError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class ShapeMismatch(ParabolicError):
    pass


class NotMonotone(ParabolicError):
    pass


class WeightTypeMismatch(ParabolicError):
    pass


class ZeroRank(ParabolicError):
    pass


class InvalidBounds(ParabolicError):
    pass


class GenusTooLow(ParabolicError):
    pass


@dataclass(frozen=True)
class WeightType:
    """Flag lengths ``w_i`` at the ``k`` marked points."""

    weights: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        for w in self.weights:
            if w < 1:
                raise ShapeMismatch(f"flag length must be >= 1, got {w}")

    @property
    def k(self) -> int:
        return len(self.weights)

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(w - 1 for w in self.weights)

    def __repr__(self) -> str:
        return f"WeightType{self.weights!r}"


@dataclass(frozen=True)
class DimVector:
    """Rank plus flag-dimension rows; validated on construction."""

    rank: int
    rows: tuple[tuple[int, ...], ...]
    weight_type: WeightType

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "rank", int(self.rank))
        _check(self.rank, rows, self.weight_type)

    @classmethod
    def _trusted(cls, rank: int, rows: tuple, wt: WeightType) -> DimVector:
        # For vectors already known to be valid; skips the checks.
        obj = object.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "weight_type", wt)
        return obj

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def key(self) -> tuple[int, ...]:
        """Sort key ``(rank, flattened rows)`` used for canonical ordering."""
        return (self.rank, *self.flat)

    def full_row(self, i: int) -> tuple[int, ...]:
        """Row ``i`` with both flag ends: ``(rank, a_i1, ..., a_i,w_i-1, 0)``."""
        return (self.rank, *self.rows[i], 0)

    def is_zero(self) -> bool:
        return self.rank == 0

    def __add__(self, other: DimVector) -> DimVector:
        _same_type(self, other)
        return DimVector(
            self.rank + other.rank,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.weight_type,
        )

    def __sub__(self, other: DimVector) -> DimVector:
        # Raises NotMonotone when the difference is not a dimension vector.
        _same_type(self, other)
        return DimVector(
            self.rank - other.rank,
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.weight_type,
        )

    def to_dict(self) -> dict:
        return {"rank": self.rank, "flags": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        rows = ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows)
        return f"({self.rank};{rows})"


@dataclass(frozen=True)
class SheafDatum:
    """A parabolic bundle reduced to its dimension vector and degree."""

    dimvec: DimVector
    degree: int


def _check(rank: int, rows: Sequence[Sequence[int]], wt: WeightType) -> None:
    if len(rows) != wt.k:
        raise ShapeMismatch(f"expected {wt.k} flag rows, got {len(rows)}")
    for i, (row, n) in enumerate(zip(rows, wt.row_lengths())):
        if len(row) != n:
            raise ShapeMismatch(f"row {i} should have length {n}, got {len(row)}")
    if rank < 0:
        raise NotMonotone(f"rank must be nonnegative, got {rank}")
    for i, row in enumerate(rows):
        prev = rank
        for j, x in enumerate(row, start=1):
            if x < 0 or x > prev:
                raise NotMonotone(f"flag row {i} breaks monotonicity at entry {j}: {list(row)} (rank {rank})")
            prev = x


def validate(rank: int, rows: Sequence[Sequence[int]], wt: WeightType) -> DimVector:
    """Build a :class:`DimVector`, raising ``ShapeMismatch`` or ``NotMonotone``."""
    return DimVector(rank, tuple(tuple(r) for r in rows), wt)


def zero(wt: WeightType) -> DimVector:
    return DimVector(0, tuple((0,) * n for n in wt.row_lengths()), wt)


def _same_type(a: DimVector, b: DimVector) -> None:
    if a.weight_type != b.weight_type:
        raise WeightTypeMismatch(f"{a.weight_type} vs {b.weight_type}")


def euler_form(a: DimVector, b: DimVector) -> int:
    """``<a, b> = a_0 b_0 + sum_{i,j} (b_{i,j+1} - b_{ij}) a_{i,j+1}``."""
    _same_type(a, b)
    total = a.rank * b.rank
    for i in range(a.weight_type.k):
        ar, br = a.full_row(i), b.full_row(i)
        for j in range(len(ar) - 1):
            total += (br[j + 1] - br[j]) * ar[j + 1]
    return total


def q(a: DimVector) -> int:
    return euler_form(a, a)


def p(a: DimVector) -> int:
    return 1 - q(a)


def sym_form(a: DimVector, b: DimVector) -> int:
    return euler_form(a, b) + euler_form(b, a)


def chi_hom(f: SheafDatum, e: SheafDatum, g: int) -> int:
    """Euler characteristic of parabolic homs from ``f`` to ``e`` on a genus ``g`` curve.

    With ``f`` of vector beta and ``e`` of vector alpha this is
    ``beta_0 deg E - alpha_0 deg F - g alpha_0 beta_0 + <beta, alpha>``.
    """
    alpha, beta = e.dimvec, f.dimvec
    _same_type(alpha, beta)
    return (
        beta.rank * e.degree
        - alpha.rank * f.degree
        - g * alpha.rank * beta.rank
        + euler_form(beta, alpha)
    )


def _monotone_rows(top: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for x in range(top + 1):
        for rest in _monotone_rows(x, length - 1):
            yield (x, *rest)


def iter_dimvectors(wt: WeightType, rank: int) -> Iterator[DimVector]:
    """All valid dimension vectors of the given weight type and rank."""
    per_row = [list(_monotone_rows(rank, n)) for n in wt.row_lengths()]
    for rows in itertools.product(*per_row):
        yield DimVector(rank, rows, wt)


def iter_weight_types(max_points: int, max_flag_len: int) -> Iterator[WeightType]:
    """Every weight type with at most ``max_points`` points and ``w_i <= max_flag_len``."""
    for k in range(max_points + 1):
        for ws in itertools.product(range(1, max_flag_len + 1), repeat=k):
            yield WeightType(ws)


def iter_grid(max_rank: int, max_points: int, max_flag_len: int) -> Iterable[DimVector]:
    """Positive-rank vectors over all weight types within the bounds."""
    for wt in iter_weight_types(max_points, max_flag_len):
        for rank in range(1, max_rank + 1):
            yield from iter_dimvectors(wt, rank)


def nontrivial_points(a: DimVector) -> int:
    """Number of marked points whose flag has a proper nonzero subspace."""
    return sum(1 for row in a.rows if any(0 < x < a.rank for x in row))
