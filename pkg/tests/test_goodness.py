import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parabolic_goodness import (
    Classification,
    DimVector,
    GenusTooLow,
    WeightType,
    ZeroRank,
    check_g0,
    check_g1,
    check_g_high,
    decide,
    decompositions,
    euler_form,
    iter_grid,
    q,
    validate,
)
from parabolic_goodness.goodness import flag_cross_term

from .conftest import dim_vectors, vec

AVG = Classification.ALMOST_VERY_GOOD
AGO = Classification.ALMOST_GOOD_ONLY
NAG = Classification.NOT_ALMOST_GOOD


@pytest.mark.parametrize(
    "a, g, cls, margin",
    [
        (vec(2), 2, AVG, -1),
        (vec(2), 1, NAG, 1),
        (vec(2), 0, NAG, 3),
        (vec(2, [1]), 1, AGO, 0),
        (vec(2, [1], [1]), 1, AVG, -1),
        (vec(2, [1], [1], [1], [1]), 0, AVG, -1),
        (vec(2, [1], [1], [1]), 0, AGO, 0),
    ],
)
def test_decide_examples(a, g, cls, margin):
    v = decide(a, g)
    assert (v.classification, v.margin) == (cls, margin)
    assert v.witness.total() == a


@pytest.mark.parametrize("g", [0, 1, 2, 7])
def test_rank_one_vacuous(g):
    v = decide(vec(1, [1], [0, 0]), g)
    assert v == decide(vec(1), g)
    assert (v.classification, v.margin, v.witness) == (AVG, None, None)


def test_zero_rank():
    z = validate(0, [[0]], WeightType((2,)))
    for fn in (lambda: decide(z, 1), lambda: check_g0(z), lambda: check_g1(z), lambda: check_g_high(z, 2)):
        with pytest.raises(ZeroRank):
            fn()


def test_classification_from_margin():
    assert Classification.from_margin(None) is AVG
    assert Classification.from_margin(-3) is AVG
    assert Classification.from_margin(0) is AGO
    assert Classification.from_margin(2) is NAG


class TestGenusZero:
    def test_four_points(self):
        assert check_g0(vec(2, [1], [1], [1], [1])) == (True, True)

    def test_three_points(self):
        assert check_g0(vec(2, [1], [1], [1])) == (True, False)

    def test_no_points(self):
        assert check_g0(vec(2)) == (False, False)


class TestGenusOne:
    def test_cross_terms(self):
        a = vec(2, [1], [1])
        for d in decompositions(a, 2):
            assert 1 - d.t + flag_cross_term(d) == 1
        assert check_g1(a) == (True, True)

    def test_one_point(self):
        assert check_g1(vec(2, [1])) == (True, False)

    def test_no_points(self):
        assert check_g1(vec(2)) == (False, False)


class TestHighGenus:
    @pytest.mark.parametrize("a, g", [(vec(2), 2), (vec(3, [2, 1]), 3), (vec(1, [0]), 2)])
    def test_constant(self, a, g):
        assert check_g_high(a, g) is AVG
        assert decide(a, g).classification is AVG

    @pytest.mark.parametrize("g", [0, 1])
    def test_low_genus_rejected(self, g):
        with pytest.raises(GenusTooLow):
            check_g_high(vec(2), g)


GRID = list(iter_grid(3, 2, 3))


@pytest.mark.parametrize("a", GRID, ids=str)
def test_grid_cross_checks(a):
    assert check_g0(a) == decide(a, 0).flags
    assert check_g1(a) == decide(a, 1).flags
    for g in (2, 3):
        assert decide(a, g).classification is check_g_high(a, g)
    margins = [decide(a, g).margin for g in range(5)]
    if a.rank >= 2:
        assert all(m1 < m0 for m0, m1 in zip(margins, margins[1:]))
    for d in decompositions(a, 2):
        cross = sum(euler_form(b, c) for b, c in itertools.permutations(d.parts, 2))
        # permutations of equal parts still count as l != m pairs
        assert q(a) == sum(q(b) for b in d.parts) + cross


def _permute(a: DimVector, order) -> DimVector:
    wt = WeightType(tuple(a.weight_type.weights[i] for i in order))
    return DimVector(a.rank, tuple(a.rows[i] for i in order), wt)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 3), max_size=3).flatmap(
        lambda ws: dim_vectors(WeightType(tuple(ws)), 1, 3).map(lambda a: (a, ws))
    ),
    st.randoms(use_true_random=False),
    st.integers(0, 2),
)
def test_point_permutation_and_flagless_points(a_ws, rnd, g):
    a, ws = a_ws
    base = decide(a, g)
    order = list(range(len(ws)))
    rnd.shuffle(order)
    permuted = decide(_permute(a, order), g)
    assert (permuted.classification, permuted.margin) == (base.classification, base.margin)

    wt = WeightType((*ws, 1))
    widened = decide(DimVector(a.rank, (*a.rows, ()), wt), g)
    assert (widened.classification, widened.margin) == (base.classification, base.margin)


def test_very_good_persists_in_higher_genus():
    for a in GRID:
        for g in range(3):
            if decide(a, g).classification is AVG:
                assert decide(a, g + 1).classification is AVG
