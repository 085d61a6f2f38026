"""Duplicate-free enumeration of decompositions of a dimension vector.

A decomposition is a multiset of valid dimension vectors of positive rank
summing to a target.  Parts are kept sorted in non-increasing order of
``(rank, flattened rows)``, which makes the stored tuple a canonical form.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterator

from .core import DimVector, InvalidBounds, WeightType


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[DimVector, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a decomposition needs at least one part")

    @classmethod
    def from_parts(cls, parts) -> Decomposition:
        """Canonicalize an arbitrary sequence of parts."""
        return cls(tuple(sorted(parts, key=DimVector.key, reverse=True)))

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def weight_type(self) -> WeightType:
        return self.parts[0].weight_type

    def total(self) -> DimVector:
        acc = self.parts[0]
        for part in self.parts[1:]:
            acc = acc + part
        return acc

    def is_canonical(self) -> bool:
        keys = [part.key() for part in self.parts]
        return keys == sorted(keys, reverse=True)

    def to_list(self) -> list[dict]:
        return [part.to_dict() for part in self.parts]

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.parts)) + "}"


def _check_bounds(min_parts: int, max_parts: int | None) -> None:
    if min_parts < 1:
        raise InvalidBounds(f"min_parts must be >= 1, got {min_parts}")
    if max_parts is not None and max_parts < min_parts:
        raise InvalidBounds(f"max_parts {max_parts} < min_parts {min_parts}")


def _row_choices(rank: int, rem_row: tuple[int, ...]) -> list[tuple[int, ...]]:
    # Rows v with v and rem - v both monotone; rem_row includes rem.rank in front.
    out: list[tuple[int, ...]] = []

    def go(j: int, prev: int, acc: tuple[int, ...]) -> None:
        if j == len(rem_row):
            out.append(acc)
            return
        gap = rem_row[j - 1] - rem_row[j]
        lo = max(0, prev - gap)
        hi = min(prev, rem_row[j])
        for x in range(hi, lo - 1, -1):
            go(j + 1, x, acc + (x,))

    go(1, rank, ())
    return out


@lru_cache(maxsize=200_000)
def _splits(rem: DimVector) -> tuple[tuple[tuple[int, ...], DimVector, DimVector], ...]:
    """``(key, v, rem - v)`` for valid ``v`` of rank >= 1 with ``rem - v`` valid.

    Sorted by decreasing key of ``v``.
    """
    wt = rem.weight_type
    out = []
    for rank in range(rem.rank, 0, -1):
        choices = [_row_choices(rank, (rem.rank, *row)) for row in rem.rows]
        for rows in itertools.product(*choices):
            part = DimVector._trusted(rank, rows, wt)
            rest_rows = tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(rem.rows, rows))
            rest = DimVector._trusted(rem.rank - rank, rest_rows, wt)
            out.append((part.key(), part, rest))
    return tuple(out)


def decompositions(
    target: DimVector, min_parts: int = 1, max_parts: int | None = None
) -> Iterator[Decomposition]:
    """Lazily yield every decomposition of ``target`` with a part count in range.

    Decompositions come out in decreasing lexicographic order of their part
    keys, so ``{target}`` itself (when allowed) is first.
    """
    _check_bounds(min_parts, max_parts)
    return _walk(target, min_parts, max_parts)


def _walk(target: DimVector, min_parts: int, max_parts: int | None) -> Iterator[Decomposition]:
    if target.rank == 0:
        return

    def walk(rem: DimVector, prev: tuple | None, acc: tuple[DimVector, ...]):
        n = len(acc)
        if rem.rank == 0:
            if n >= min_parts:
                yield Decomposition(acc)
            return
        if max_parts is not None and n >= max_parts:
            return
        if n + rem.rank < min_parts:
            return
        for key, part, rest in _splits(rem):
            if prev is not None and key > prev:
                continue
            if rest.rank and max_parts is not None and n + 2 > max_parts:
                continue
            yield from walk(rest, key, acc + (part,))

    yield from walk(target, None, ())


def count_decompositions(target: DimVector, min_parts: int = 1, max_parts: int | None = None) -> int:
    return sum(1 for _ in decompositions(target, min_parts, max_parts))
