"""
Tests for the coefficient tables and the closed-form comparator
"""
import itertools

import pytest

from src.algebra.liealg import D, GenId, Kind
from src.algebra.scalars import ONE, ZERO, qpow
from src.algebra.uea import UElt
from src.models.context import Case, TwistContext
from src.models.results import Verdict
from src.quantum import (
    CoeffTables, alpha_beta, cf_delta, compare, mirror_transport_check, eta, gamma, rho, s_m,
)
from src.quantum.closedform import r_value
from src.quantum.compare import compare_values
from src.quantum.twist import twisted_delta
from src.utils.errors import UsageError

DEGREES = [(0, 0), (1, 0), (0, 1), (-1, -1), (2, -1)]
SWAP = {"e": "f", "f": "e", "g": "h", "h": "g"}


def test_zeroth_coefficients_are_one():
    for y in "efgh":
        assert gamma(0, (1, 2), (1, 1), y) == ONE
        assert eta(0, (1, 2), (1, 1), y) == ONE


def test_vanishing_families():
    assert gamma(2, (1, 0), (1, 1), "h") == ZERO
    assert eta(1, (1, 0), (1, 1), "g") == ZERO


def test_first_gamma_values():
    assert gamma(1, (2, 0), (1, 1), "e") == -qpow(2)
    assert gamma(1, (0, 3), (1, 1), "f") == qpow(3)


@pytest.mark.parametrize("n", [(1, 1), (0, 1), (2, -1)])
def test_adjoint_action_matches_gamma(n):
    for m, i, y in itertools.product(DEGREES + [(-n[0], -n[1])], range(4), "efg"):
        if y == "g" and m == (0, 0):
            continue
        assert rho(i, m, n, y) == gamma(i, m, n, y), (m, i, y)


@pytest.mark.parametrize("n", [(1, 1), (2, -1)])
def test_eta_is_gamma_with_families_swapped(n):
    for m, i, y in itertools.product(DEGREES, range(4), "efgh"):
        assert eta(i, m, n, y) == gamma(i, m, n, SWAP[y])


def test_alpha_beta():
    assert alpha_beta("e", (1, 1), (0, 1)) == ZERO
    assert alpha_beta("f", (1, 1), (0, 1), "beta") == ZERO
    assert alpha_beta("g", (1, 2), (3, 0)) == qpow(6)
    with pytest.raises(UsageError):
        alpha_beta("f", (1, 1), (0, 1))
    with pytest.raises(UsageError):
        alpha_beta("e", (1, 1), (0, 1), "gamma")


def test_s_and_r():
    assert s_m((1, 0), (1, 1)) == qpow(2)
    ctx = TwistContext(case="g", n=(1, 1), x=(1, 0), order=1)
    assert r_value(ctx, (3, 5)) == 3
    tables = CoeffTables(ctx)
    assert tables.r((3, 5)) == 3
    assert tables.s((1, 0)) == qpow(2)
    with pytest.raises(UsageError):
        r_value(TwistContext(case="d", n=(1, 1), order=1), (1, 1))


def test_derivation_d_matches_in_the_g_case():
    ctx = TwistContext(case="g", n=(1, 1), order=3)
    report = compare(ctx, D)
    assert report.verdict is Verdict.PASS
    assert report.first_mismatch_order is None


def test_unit_matches_in_every_case():
    for case in Case:
        report = compare(TwistContext(case=case, n=(1, 1), order=2), None)
        assert report.verdict is Verdict.PASS, report.describe()


def test_printed_e_coproduct_matches_conjugation():
    ctx = TwistContext(case="e", n=(0, 1), x=(0, 1), order=3)
    y = GenId(Kind.E, 0, 1)
    assert compare_values(cf_delta(ctx, y), twisted_delta(ctx, UElt.gen(y))) is None


@pytest.mark.parametrize("case", [Case.E, Case.D])
def test_comparator_never_fails(case):
    ctx = TwistContext(case=case, n=(1, 1), order=2)
    for g in [D, GenId(Kind.E, 0, 0), GenId(Kind.F, -1, -1), GenId(Kind.G, 1, 0)]:
        report = compare(ctx, g)
        assert report.verdict in (Verdict.PASS, Verdict.DISCREPANCY)
        if report.verdict is Verdict.DISCREPANCY:
            assert report.oracle is not None


def test_transport_rejects_unrelated_contexts():
    g = TwistContext(case="g", n=(1, 1), order=1)
    with pytest.raises(UsageError):
        mirror_transport_check(g, TwistContext(case="f", n=(1, 1), order=1), D)
    with pytest.raises(UsageError):
        mirror_transport_check(g, TwistContext(case="h", n=(0, 1), order=1), D)


@pytest.mark.parametrize("case", [Case.G, Case.E, Case.D])
def test_transport_holds_for_the_oracle(case):
    ctx = TwistContext(case=case, n=(1, 1), order=2)
    for g in [None, D, GenId(Kind.E, 1, 0), GenId(Kind.H, 0, 1)]:
        report = mirror_transport_check(ctx, ctx.mirrored(), g)
        assert not report.oracle, report.describe()
        assert report.verdict is not Verdict.FAIL
