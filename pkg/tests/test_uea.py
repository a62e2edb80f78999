"""
Tests for PBW normal forms and the undeformed Hopf structure
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.algebra.liealg import D, GenId, Kind
from src.algebra.scalars import LaurentQ
from src.algebra.uea import (
    PBWMono, TensorElt, UElt, antipode0, counit0, delta0, falling, identity, mu,
    outer, rising, straighten, tau_u, tensor_apply,
)
from src.utils.errors import UsageError
from tests.strategies import u_elements

E00 = GenId(Kind.E, 0, 0)
F00 = GenId(Kind.F, 0, 0)
F10 = GenId(Kind.F, 1, 0)
G10 = GenId(Kind.G, 1, 0)
H10 = GenId(Kind.H, 1, 0)
E10 = GenId(Kind.E, 1, 0)
E11 = GenId(Kind.E, 1, 1)


def u(*factors):
    return UElt.mono(PBWMono(factors))


def test_straighten_swaps_out_of_order_pairs():
    expected = u(E00, F10) - u(G10) + u(H10)
    assert straighten([F10, E00]) == expected


def test_straighten_keeps_sorted_words():
    assert straighten([D, E11]) == u(D, E11)
    assert straighten([E00]) == u(E00)
    assert straighten([]) == UElt.one()


def test_commutator_is_the_bracket():
    e, f = UElt.gen(E00), UElt.gen(F00)
    assert e * f - f * e == UElt.gen(D)


def test_unsorted_monomials_are_rejected():
    with pytest.raises(ValueError):
        PBWMono((F00, E00))


@given(u_elements(), u_elements(), u_elements())
@settings(max_examples=30, deadline=None)
def test_product_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(u_elements())
@settings(max_examples=30, deadline=None)
def test_normal_form_is_idempotent(x):
    rebuilt = UElt.zero()
    for mono, c in x.items():
        rebuilt = rebuilt + straighten(tuple(mono), c)
    assert rebuilt == x


def test_delta0_examples():
    assert delta0(UElt.gen(E10)) == TensorElt({((E10,), ()): 1, ((), (E10,)): 1})
    assert delta0(UElt.one()) == TensorElt.one(2)
    dd = UElt.gen(D) * UElt.gen(D)
    assert delta0(dd) == TensorElt({((D, D), ()): 1, ((D,), (D,)): 2, ((), (D, D)): 1})


@given(u_elements())
@settings(max_examples=25, deadline=None)
def test_delta0_is_coassociative(x):
    dx = delta0(x)
    assert tensor_apply((delta0, identity), dx) == tensor_apply((identity, delta0), dx)


@given(u_elements(), u_elements())
@settings(max_examples=25, deadline=None)
def test_delta0_is_multiplicative(x, y):
    assert delta0(x * y) == delta0(x) * delta0(y)


@given(u_elements())
@settings(max_examples=25, deadline=None)
def test_antipode_axiom(x):
    assert mu(tensor_apply((antipode0, identity), delta0(x))) == UElt.scalar(counit0(x))
    assert mu(tensor_apply((identity, antipode0), delta0(x))) == UElt.scalar(counit0(x))


@given(u_elements(), u_elements())
@settings(max_examples=25, deadline=None)
def test_antipode_reverses_products(x, y):
    assert antipode0(x * y) == antipode0(y) * antipode0(x)


def test_antipode_and_counit_examples():
    assert antipode0(UElt.gen(E10)) == -UElt.gen(E10)
    assert antipode0(UElt.one()) == UElt.one()
    assert counit0(UElt.gen(E10)) == 0
    assert counit0(UElt.one()) == 1
    assert counit0(3 + UElt.gen(D) * UElt.gen(E11)) == 3


@given(u_elements(), u_elements())
@settings(max_examples=25, deadline=None)
def test_involution_is_an_automorphism(x, y):
    assert tau_u(tau_u(x)) == x
    assert tau_u(x * y) == tau_u(x) * tau_u(y)


def test_involution_example():
    x = UElt.gen(E10) * UElt.gen(GenId(Kind.F, 0, 1))
    expected = UElt.gen(GenId(Kind.F, 1, 0)) * UElt.gen(GenId(Kind.E, 0, 1))
    assert tau_u(x) == expected


def test_factorials():
    T = UElt.gen(D)
    assert rising(T, 0, 2) == T * (T + 1)
    assert falling(T, 0, 0) == UElt.one()
    assert rising(T, Fraction(1, 2), 0) == UElt.one()
    for a in (0, 1, Fraction(-1, 2)):
        for r in range(4):
            assert falling(T, a, r) == rising(T, a - r + 1, r)


@pytest.mark.parametrize("factorial", [rising, falling])
def test_negative_factorial_length(factorial):
    with pytest.raises(UsageError, match="nonnegative"):
        factorial(UElt.gen(D), 0, -1)


def test_tensor_products():
    e, f = UElt.gen(E00), UElt.gen(F00)
    one = UElt.one()
    assert TensorElt.one(2) * outer(e, f) == outer(e, f)
    assert outer(e, one) * outer(one, f) == outer(e, f)
    T, E = UElt.gen(D), UElt.gen(E10)
    assert outer(T, E) * outer(T, E) == outer(T * T, E * E)


def test_tensor_arity_mismatch():
    with pytest.raises(UsageError):
        TensorElt.one(2) * TensorElt.one(3)


def test_tensor_apply_changes_arity():
    x = UElt.gen(D) * 3 + UElt.scalar(LaurentQ.const(2))
    y = UElt.gen(E10)
    assert tensor_apply((counit0, identity), outer(x, y)) == y * 2
    expected = outer(x, y, UElt.one()) + outer(x, UElt.one(), y)
    assert tensor_apply((identity, delta0), outer(x, y)) == expected
    assert tensor_apply((antipode0, identity), TensorElt.one(2)) == TensorElt.one(2)
