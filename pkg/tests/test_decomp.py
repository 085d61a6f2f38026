import itertools

import pytest

from parabolic_goodness import (
    Decomposition,
    InvalidBounds,
    WeightType,
    count_decompositions,
    decompositions,
    iter_grid,
    validate,
)
from parabolic_goodness.oracle import oracle_decompositions

from .conftest import vec


def _parts(d):
    return [(p.rank, p.rows) for p in d.parts]


class TestExamples:
    def test_rank_two_no_points(self):
        ds = list(decompositions(vec(2), 2))
        assert [_parts(d) for d in ds] == [[(1, ()), (1, ())]]

    def test_rank_three_no_points(self):
        ds = list(decompositions(vec(3), 2))
        assert [_parts(d) for d in ds] == [[(2, ()), (1, ())], [(1, ()), (1, ()), (1, ())]]

    def test_two_points(self):
        got = {frozenset(_parts(d)) for d in decompositions(vec(2, [1], [1]), 2)}
        assert got == {
            frozenset([(1, ((1,), (1,))), (1, ((0,), (0,)))]),
            frozenset([(1, ((1,), (0,))), (1, ((0,), (1,)))]),
        }

    def test_rank_one_cannot_split(self):
        assert list(decompositions(vec(1, [1]), 2)) == []

    @pytest.mark.parametrize(
        "target, lo, expected",
        [
            (vec(2, [1]), 2, 1),
            (vec(2), 1, 2),
            (vec(1), 1, 1),
        ],
    )
    def test_counts(self, target, lo, expected):
        assert count_decompositions(target, lo) == expected
        assert len(oracle_decompositions(target, lo)) == expected

    def test_max_parts(self):
        assert count_decompositions(vec(3), 1, 2) == 2
        assert count_decompositions(vec(4), 2, 3) == 3

    def test_singleton_first(self):
        a = vec(3, [2, 1], [1])
        first = next(decompositions(a))
        assert first.parts == (a,)

    @pytest.mark.parametrize("lo, hi", [(0, None), (3, 2), (-1, 5)])
    def test_invalid_bounds(self, lo, hi):
        # raised at call time, before iteration
        with pytest.raises(InvalidBounds):
            decompositions(vec(2), lo, hi)
        with pytest.raises(InvalidBounds):
            oracle_decompositions(vec(2), lo, hi)


class TestStreaming:
    def test_lazy(self):
        stream = decompositions(vec(8, [4, 2], [5], [3, 1]))
        assert next(stream).t == 1
        assert next(stream).t >= 1

    def test_zero_rank_target_is_empty(self):
        assert list(decompositions(validate(0, [[0]], WeightType((2,))))) == []


# A smaller slice of the grid; the acceptance run covers all of it.
SMALL_GRID = list(iter_grid(3, 2, 3))


@pytest.mark.parametrize("a", SMALL_GRID, ids=str)
def test_against_oracle(a):
    ds = list(decompositions(a))
    assert len(set(ds)) == len(ds)
    assert set(ds) == oracle_decompositions(a)
    for d in ds:
        assert d.total() == a
        assert d.is_canonical()
        assert all(p.rank >= 1 for p in d.parts)
        # re-validate every part
        assert all(validate(p.rank, p.rows, p.weight_type) == p for p in d.parts)
    keys = [[p.key() for p in d.parts] for d in ds]
    assert keys == sorted(keys, reverse=True)


def test_part_counts_respect_bounds():
    a = vec(4, [2, 1], [3])
    for lo, hi in itertools.product(range(1, 5), [None, 1, 2, 3, 4]):
        if hi is not None and hi < lo:
            continue
        got = set(decompositions(a, lo, hi))
        assert got == oracle_decompositions(a, lo, hi)
        assert all(lo <= d.t <= (hi or 4) for d in got)


def test_from_parts_canonicalizes():
    a, b = vec(1, [0]), vec(2, [1])
    assert Decomposition.from_parts([a, b]).parts == (b, a)
