"""
Tests for the twist families and the conjugation oracle
"""
from fractions import Fraction

import pytest

from src.algebra.liealg import D, D1, GenId, Kind
from src.algebra.series import TSeries, one_minus_Et_pow, ts_inverse, ts_tensor
from src.algebra.uea import TensorElt, UElt, antipode0, identity, mu, outer, tensor_apply
from src.models.context import Case, TwistContext
from src.quantum import (
    build_inverse_twist, build_twist, build_u, build_u_inv, check_cocycle, check_hopf,
    noncocommutativity_witness, twisted_antipode, twisted_delta,
)

SHIFTS = (0, 1, Fraction(-1, 2))


def test_twist_to_first_order():
    ctx = TwistContext(case="g", n=(1, 1), order=1)
    assert build_twist(ctx) == TSeries([TensorElt.one(2), -outer(ctx.T, ctx.E_elt)])
    assert build_inverse_twist(ctx) == TSeries([TensorElt.one(2), outer(ctx.T, ctx.E_elt)])
    assert build_inverse_twist(ctx, 1) == TSeries([TensorElt.one(2), outer(ctx.T + 1, ctx.E_elt)])
    assert build_u(ctx) == TSeries([UElt.one(), ctx.T * ctx.E_elt])


def test_inverse_twist_inverts(any_context):
    for c in SHIFTS:
        assert build_inverse_twist(any_context, c) == ts_inverse(build_twist(any_context, c))


def test_twist_products_with_different_shifts(any_context):
    N = any_context.order
    unit = TSeries.constant(UElt.one(), N)
    for c in SHIFTS:
        for d in SHIFTS:
            expected = ts_tensor(unit, one_minus_Et_pow(any_context.E_elt, c - d, N))
            assert build_twist(any_context, c) * build_inverse_twist(any_context, d) == expected


@pytest.mark.parametrize("c, d", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_u_products(g_context, c, d):
    expected = one_minus_Et_pow(g_context.E_elt, -(c + d), g_context.order)
    assert build_u(g_context, c) * build_u_inv(g_context, d) == expected


def test_u_is_the_antipode_image_of_the_twist(any_context):
    image = build_twist(any_context).map(lambda c: mu(tensor_apply((identity, antipode0), c)))
    assert build_u(any_context) == image
    assert build_u(any_context) * build_u_inv(any_context) == TSeries.constant(UElt.one(), any_context.order)


def test_twist_is_a_cocycle(any_context):
    report = check_cocycle(any_context)
    assert report.passed, [c.mismatch.describe() for c in report.checks if c.mismatch]


def test_corrupted_twist_is_caught():
    ctx = TwistContext(case="g", n=(1, 1), order=2)
    twist = build_twist(ctx)
    corrupted = TSeries([twist[0], twist[1] * 2, twist[2]])
    report = check_cocycle(ctx, corrupted)
    assert not report.passed
    failed = {c.axiom for c in report.checks if not c.passed}
    assert failed == {"cocycle"}


def test_degree_derivation_d_is_primitive(g_context):
    d = UElt.gen(D)
    N = g_context.order
    assert twisted_delta(g_context, d) == TSeries.constant(outer(d, UElt.one()) + outer(UElt.one(), d), N)
    assert twisted_antipode(g_context, d) == TSeries.constant(-d, N)
    assert twisted_antipode(g_context, UElt.one()) == TSeries.constant(UElt.one(), N)


def test_antipode_of_d1_to_first_order():
    ctx = TwistContext(case="g", n=(1, 1), order=1)
    d1 = UElt.gen(D1)
    assert twisted_antipode(ctx, d1) == TSeries([-d1, ctx.T * ctx.E_elt])


def test_coproduct_constant_term_is_primitive(any_context):
    x = UElt.gen(GenId(Kind.E, 1, 0))
    assert twisted_delta(any_context, x)[0] == outer(x, UElt.one()) + outer(UElt.one(), x)


def test_e_case_coproduct(e_context):
    y = UElt.gen(GenId(Kind.E, 0, 1))
    expected = (ts_tensor(TSeries.constant(y, 2), one_minus_Et_pow(e_context.E_elt, 1, 2))
                + TSeries.constant(outer(UElt.one(), y), 2))
    assert twisted_delta(e_context, y) == expected


def test_hopf_axioms(e_context):
    samples = [UElt.gen(D), UElt.gen(GenId(Kind.F, 0, 0)), UElt.gen(GenId(Kind.G, 1, 0))]
    pairs = [(samples[1], samples[2])]
    checks = check_hopf(e_context, samples, pairs)
    assert len(checks) == 5 * len(samples) + 3 * len(pairs)
    assert all(c.passed for c in checks), [c.mismatch.describe() for c in checks if not c.passed]


@pytest.mark.parametrize("case", list(Case))
def test_every_quantization_is_noncocommutative(case):
    ctx = TwistContext(case=case, n=(1, 1), order=1)
    window = [D, D1, GenId(Kind.E, 0, 0), GenId(Kind.F, 0, 0), GenId(Kind.G, 1, 0), GenId(Kind.H, 1, 0)]
    assert noncocommutativity_witness(ctx, window) is not None
