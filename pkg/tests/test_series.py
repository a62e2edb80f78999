"""
Tests for truncated power series
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra.liealg import D, GenId, Kind
from src.algebra.series import TSeries, first_mismatch, one_minus_Et_pow, ts_inverse, ts_tensor
from src.algebra.uea import TensorElt, UElt, outer
from src.utils.errors import UsageError

T = UElt.gen(D)
E = UElt.gen(GenId(Kind.E, 0, 1))
ONE = UElt.one()
ZERO = UElt.zero()

rationals = st.fractions(min_value=-2, max_value=2, max_denominator=3)


def test_difference_of_squares():
    a = TSeries([ONE, T, ZERO])
    b = TSeries([ONE, -T, ZERO])
    assert a * b == TSeries([ONE, ZERO, -(T * T)])


def test_tensor_coefficients():
    one = TensorElt.one(2)
    a = TSeries([one, -outer(T, E), TensorElt.zero(2)])
    b = TSeries([one, outer(T, E), TensorElt.zero(2)])
    assert a * b == TSeries([one, TensorElt.zero(2), -outer(T * T, E * E)])


def test_geometric_inverse():
    inverse = ts_inverse(one_minus_Et_pow(E, 1, 3))
    assert inverse == TSeries([ONE, E, E * E, E * E * E])
    assert inverse == one_minus_Et_pow(E, -1, 3)
    assert ts_inverse(TSeries.constant(ONE, 2)) == TSeries.constant(ONE, 2)


def test_square_root_coefficients():
    half = one_minus_Et_pow(E, Fraction(1, 2), 2)
    assert half == TSeries([ONE, E.scale(Fraction(-1, 2)), (E * E).scale(Fraction(-1, 8))])


@given(rationals, rationals)
@settings(max_examples=30, deadline=None)
def test_powers_add(r, s):
    N = 3
    assert one_minus_Et_pow(E, r, N) * one_minus_Et_pow(E, s, N) == one_minus_Et_pow(E, r + s, N)
    assert one_minus_Et_pow(E, r, N) * one_minus_Et_pow(E, -r, N) == TSeries.constant(ONE, N)


@given(rationals)
@settings(max_examples=20, deadline=None)
def test_double_inverse(r):
    a = one_minus_Et_pow(E, r, 3) + TSeries([ZERO, T, ZERO, T * E])
    assert ts_inverse(ts_inverse(a)) == a
    assert a * ts_inverse(a) == TSeries.constant(ONE, 3)


def test_inverse_needs_scalar_constant_term():
    with pytest.raises(UsageError):
        ts_inverse(TSeries([T, ONE]))
    with pytest.raises(UsageError):
        ts_inverse(TSeries([ZERO, ONE]))


def test_mixed_orders_truncate():
    a = TSeries([ONE, T, T * T])
    b = TSeries([ONE, E])
    assert (a * b).order == 1
    assert (a + b) == TSeries([ONE + ONE, T + E])


def test_mixed_kinds_are_rejected():
    with pytest.raises(UsageError):
        TSeries([ONE, TensorElt.one(2)])
    with pytest.raises(UsageError):
        TSeries([ONE]) + TSeries([TensorElt.one(2)])


def test_shift_and_monomial():
    assert TSeries.constant(T, 2).shift(1) == TSeries.monomial(T, 1, 2)
    assert TSeries.monomial(T, 3, 2).is_zero()


def test_outer_product_of_series():
    a = TSeries([ONE, T])
    b = TSeries([ONE, E])
    assert ts_tensor(a, b) == TSeries([TensorElt.one(2), outer(T, ONE) + outer(ONE, E)])


def test_first_mismatch_reports_lowest_order():
    a = TSeries([ONE, T, T])
    b = TSeries([ONE, T, E])
    found = first_mismatch(a, b)
    assert found.order == 2
    assert first_mismatch(a, a) is None
