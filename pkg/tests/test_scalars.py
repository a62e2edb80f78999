"""
Tests for exact scalars and the Laurent ring
"""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from src.algebra.scalars import LaurentQ, ONE, Q, ZERO, as_rational, gen_binomial, qpow
from tests.strategies import laurent


@given(laurent, laurent)
def test_product_agrees_with_sympy(a, b):
    assert sympy.expand((a * b).to_sympy() - a.to_sympy() * b.to_sympy()) == 0


@given(laurent, laurent, laurent)
@settings(max_examples=50)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == ZERO
    assert a * ONE == a


def test_zero_coefficients_are_dropped():
    assert LaurentQ({0: 0, 3: Fraction(0)}) == ZERO
    assert (Q - Q).is_zero()
    assert not LaurentQ({1: 0})


def test_render_is_ascending():
    assert LaurentQ({2: 1, 0: -1}).render() == "-1 + q^2"
    assert LaurentQ({-2: 1}).render() == "q^-2"
    assert LaurentQ({1: Fraction(1, 2)}).render() == "1/2*q"
    assert ZERO.render() == "0"


def test_only_monomials_invert():
    assert qpow(2) ** -1 == qpow(-2)
    assert LaurentQ({3: 4}).inverse() == LaurentQ({-3: Fraction(1, 4)})
    with pytest.raises(ZeroDivisionError):
        (1 - Q).inverse()


def test_evaluate():
    assert (1 - Q).evaluate(2) == -1
    assert (Q ** -1).evaluate(Fraction(1, 3)) == 3
    with pytest.raises(ZeroDivisionError):
        qpow(-1).evaluate(0)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational(" -3/4 ") == Fraction(-3, 4)


@pytest.mark.parametrize("r, k, expected", [
    (Fraction(1, 2), 2, Fraction(-1, 8)),
    (Fraction(-1), 3, Fraction(-1)),
    (3, 5, 0),
    (Fraction(7, 3), 0, 1),
])
def test_gen_binomial(r, k, expected):
    assert gen_binomial(Fraction(r), k) == expected


def test_gen_binomial_rejects_negative_k():
    with pytest.raises(ValueError):
        gen_binomial(Fraction(1), -1)
