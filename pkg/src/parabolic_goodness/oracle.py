"""Brute-force reference implementations, independent of ``decomp``/``dims``/``goodness``.

Only the Euler form and the vector types are shared.  Speed is not a goal.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import DimVector, InvalidBounds, ZeroRank, q
from .decomp import Decomposition
from .goodness import Classification, Verdict


# Vectors are handled here as flat tuples (rank, a_11, ..., a_k,w_k-1).


def _valid(vec: tuple[int, ...], lengths: tuple[int, ...]) -> bool:
    pos = 1
    for n in lengths:
        prev = vec[0]
        for x in vec[pos : pos + n]:
            if x < 0 or x > prev:
                return False
            prev = x
        pos += n
    return vec[0] >= 0


@lru_cache(maxsize=None)
def _smaller_vectors(vec: tuple[int, ...], lengths: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # Every componentwise-smaller valid vector with positive rank.
    ranges = [range(vec[0], 0, -1)] + [range(x, -1, -1) for x in vec[1:]]
    return tuple(c for c in itertools.product(*ranges) if _valid(c, lengths))


@lru_cache(maxsize=None)
def _all_multisets(vec: tuple[int, ...], lengths: tuple[int, ...]) -> frozenset:
    found = set()
    for v in _smaller_vectors(vec, lengths):
        rest = tuple(x - y for x, y in zip(vec, v))
        if rest[0] == 0:
            if not any(rest):
                found.add((v,))
            continue
        if not _valid(rest, lengths):
            continue
        for tail in _all_multisets(rest, lengths):
            found.add(tuple(sorted((v, *tail), reverse=True)))
    return frozenset(found)


def _unflatten(vec: tuple[int, ...], wt) -> DimVector:
    rows, pos = [], 1
    for n in wt.row_lengths():
        rows.append(vec[pos : pos + n])
        pos += n
    return DimVector(vec[0], tuple(rows), wt)


def oracle_decompositions(
    target: DimVector, min_parts: int = 1, max_parts: int | None = None
) -> set[Decomposition]:
    if min_parts < 1 or (max_parts is not None and max_parts < min_parts):
        raise InvalidBounds(f"bad part bounds [{min_parts}, {max_parts}]")
    if target.rank == 0:
        return set()
    hi = target.rank if max_parts is None else max_parts
    wt = target.weight_type
    return {
        Decomposition(tuple(_unflatten(v, wt) for v in m))
        for m in _all_multisets(target.key(), wt.row_lengths())
        if min_parts <= len(m) <= hi
    }


@lru_cache(maxsize=None)
def _q(vec: tuple[int, ...], wt) -> int:
    return q(_unflatten(vec, wt))


def oracle_decide(a: DimVector, g: int) -> Verdict:
    """Evaluate the almost-good inequality at every decomposition into >= 2 parts."""
    if a.rank < 1:
        raise ZeroRank("dimension vector must have positive rank")
    wt = a.weight_type
    bun = g * a.rank * a.rank - q(a)
    best, witness = None, None
    for m in sorted(_all_multisets(a.key(), wt.row_lengths()), reverse=True):
        if len(m) < 2:
            continue
        lhs = len(m) - 1 + sum(g * b[0] * b[0] - _q(b, wt) for b in m)
        if best is None or lhs - bun > best:
            best, witness = lhs - bun, m
    if best is None:
        return Verdict(Classification.ALMOST_VERY_GOOD, None, None)
    if best < 0:
        cls = Classification.ALMOST_VERY_GOOD
    elif best == 0:
        cls = Classification.ALMOST_GOOD_ONLY
    else:
        cls = Classification.NOT_ALMOST_GOOD
    return Verdict(cls, best, Decomposition(tuple(_unflatten(v, wt) for v in witness)))
