from __future__ import annotations

import pytest

from symcy.wtypes import (
    CYSumError,
    DivisibilityError,
    InvalidTypeError,
    ParityError,
    QSStatus,
    WeightedType,
    amplitude,
    complementary_gcds_divide_degree,
    is_fermat_type,
    make_symmetric_cy,
    quasi_smooth_general,
    quotient_type,
    well_formed_type,
    well_formed_weights,
)

W = WeightedType


def test_weighted_type_validation():
    with pytest.raises(InvalidTypeError):
        W(0, [1, 2])
    with pytest.raises(InvalidTypeError):
        W(5, [1, 0, 2])
    with pytest.raises(InvalidTypeError):
        W(5, [])
    assert str(W(14, [1, 1, 2, 3, 7])) == "(14,[1,1,2,3,7])"
    assert W(14, [7, 1, 2]).sorted_view().weights == (1, 2, 7)


@pytest.mark.parametrize("t,expected", [
    (W(14, [1, 1, 2, 3, 7]), 0),
    (W(14, [7, 1, 2, 3, 7]), -6),
    (W(9, [9]), 0),
])
def test_amplitude(t, expected):
    assert amplitude(t) == expected


@pytest.mark.parametrize("weights,expected", [
    ([1, 1, 2, 3, 7], True),
    ([2, 2, 4, 6, 14], False),
    ([21, 1, 132, 308, 462], True),
    ([2, 4, 6, 1, 3], True),
    ([1, 6, 10, 15], True),
    ([3, 6, 9, 1, 12], False),
])
def test_well_formed_weights(weights, expected):
    assert well_formed_weights(W(60, weights)) is expected


def test_well_formed_type_examples():
    assert well_formed_type(W(14, [1, 1, 2, 3, 7]))
    assert well_formed_type(W(5, [1, 1, 1, 1, 1]))


def test_curve_of_worked_example_is_not_well_formed():
    # The weights themselves are fine; the failure is the complement of the
    # pair {1, 2}, i.e. the weight 3, which does not divide 14.
    t = W(14, [1, 2, 3])
    assert well_formed_weights(t)
    assert not complementary_gcds_divide_degree(t)
    assert not well_formed_type(t)


def test_complementary_gcd_on_threefold():
    assert complementary_gcds_divide_degree(W(24, [1, 1, 4, 6, 12]))
    # Dropping 1 and 3 leaves {2, 4, 6}, whose gcd 2 does not divide 15.
    assert not complementary_gcds_divide_degree(W(15, [1, 2, 4, 6, 3]))


@pytest.mark.parametrize("t,expected", [
    (W(336, [7, 1, 48, 112, 168]), True),
    (W(14, [1, 1, 2, 3, 7]), False),
    (W(11, [1, 1, 1]), True),
])
def test_is_fermat_type(t, expected):
    assert is_fermat_type(t) is expected


def test_quasi_smooth_fermat():
    v = quasi_smooth_general(W(336, [7, 1, 48, 112, 168]))
    assert v.status is QSStatus.QUASI_SMOOTH and v.criterion == "F"


def test_quasi_smooth_single_non_divisor():
    v = quasi_smooth_general(W(14, [1, 1, 2, 3, 7]))
    assert v.quasi_smooth and v.criterion == "S"
    assert "14=4*3+2" in v.witness


def test_quasi_smooth_first_table4_row():
    # Only the weight 3 fails to divide 20, and 20 = 5*3 + 5 gives x^5 * y,
    # so the single-non-divisor criterion already applies.
    v = quasi_smooth_general(W(20, [1, 1, 3, 5, 10]))
    assert v.quasi_smooth and v.criterion == "S"
    assert "20=5*3+5" in v.witness


def test_quasi_smooth_several_non_divisors():
    # 9 and 14 both fail to divide 28; x2^9*x0 and x3^3*x0 both point at x0,
    # and the subset condition still holds.
    v = quasi_smooth_general(W(28, [1, 1, 3, 9, 14]))
    assert v.quasi_smooth and v.criterion == "M"
    assert v.witness == "x2^9*x0; x3^3*x0"


def test_not_quasi_smooth_when_a_variable_has_no_pointing_monomial():
    v = quasi_smooth_general(W(10, [1, 1, 7]))
    assert v.status is QSStatus.NOT_QUASI_SMOOTH_GENERAL
    assert "x2" in v.witness


def test_inconclusive_when_subset_condition_fails():
    # Each variable has its own pointing monomial, but x0 and x1 both point
    # only at x2, so the pair {x0, x1} lacks a second partner.
    t = W(12, [5, 5, 2])
    assert quasi_smooth_general(t).status is QSStatus.INCONCLUSIVE


def test_make_symmetric_cy_worked_example():
    t = make_symmetric_cy(1, 2, 3, 7)
    assert t.degree == 14 and t.m == 14
    assert t.wtype == W(14, [1, 1, 2, 3, 7])
    assert t.curve_type == W(14, [1, 2, 3])


def test_make_symmetric_cy_table_row():
    t = make_symmetric_cy(7, 48, 112, 168)
    assert (t.degree, t.m) == (336, 48)
    assert amplitude(t.wtype) == 0


def test_make_symmetric_cy_sorts_a_b():
    assert make_symmetric_cy(1, 3, 2, 7) == make_symmetric_cy(1, 2, 3, 7)


@pytest.mark.parametrize("args,err,fragment", [
    ((2, 2, 3, 7), CYSumError, "CY-sum violation"),
    ((5, 1, 2, 9), DivisibilityError, "divisibility"),
    ((8, 1, 2, 12), ParityError, "parity"),
    ((1, 2, 9, 7), InvalidTypeError, "b < c"),
])
def test_make_symmetric_cy_errors(args, err, fragment):
    with pytest.raises(err, match=fragment):
        make_symmetric_cy(*args)


def test_quotient_type():
    t = make_symmetric_cy(1, 2, 3, 7)
    assert quotient_type(t, 2) == W(14, [7, 1, 2, 3, 7])
    assert quotient_type(t, 7) == W(14, [2, 1, 2, 3, 7])
    assert quotient_type(t, 1) == W(14, [14, 1, 2, 3, 7])
    for bad in (3, 14, 0):
        with pytest.raises(InvalidTypeError):
            quotient_type(t, bad)
