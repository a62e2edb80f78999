"""
Twist elements and the twisted Hopf structure.

For a context (T, E) with [T, E] = E the element

    F = sum_i (-1)^i / i!  T^[i] (x) E^i t^i

is a Drinfel'd twist of U(W)[[t]].  Conjugating the primitive coproduct by
it, and the antipode by u = mu(Id (x) S0)(F), gives the quantized
structure.  These conjugations are computed directly here and serve as the
reference values that closed forms are compared against.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from src.algebra.liealg import GenId
from src.algebra.scalars import RationalLike, as_rational, factorial
from src.algebra.series import TSeries, ts_apply
from src.algebra.uea import (
    TensorElt, UElt, antipode0, counit0, delta0, falling, flip, identity, mu,
    outer, rising, tensor_apply,
)
from src.models.context import TwistContext
from src.models.results import AxiomCheck, CocycleReport
from src.quantum.compare import compare_values

logger = logging.getLogger(__name__)


def _series(ctx: TwistContext, term) -> TSeries:
    """sum_i term(i) t^i, with E^i supplied to term"""
    E = ctx.E_elt
    power = UElt.one()
    coeffs = []
    for i in range(ctx.order + 1):
        coeffs.append(term(i, power))
        power = power * E
    return TSeries(coeffs)


@lru_cache(maxsize=None)
def _build_twist(ctx: TwistContext, c: Fraction) -> TSeries:
    T = ctx.T
    return _series(ctx, lambda i, Ei: outer(
        falling(T, c, i).scale(Fraction((-1) ** i) / factorial(i)), Ei))


@lru_cache(maxsize=None)
def _build_inverse_twist(ctx: TwistContext, c: Fraction) -> TSeries:
    T = ctx.T
    return _series(ctx, lambda i, Ei: outer(rising(T, c, i).scale(1 / factorial(i)), Ei))


@lru_cache(maxsize=None)
def _build_u(ctx: TwistContext, c: Fraction) -> TSeries:
    T = ctx.T
    return _series(ctx, lambda i, Ei: falling(T, c, i).scale(1 / factorial(i)) * Ei)


@lru_cache(maxsize=None)
def _build_u_inv(ctx: TwistContext, c: Fraction) -> TSeries:
    T = ctx.T
    return _series(ctx, lambda i, Ei: falling(T, -c, i).scale(Fraction((-1) ** i) / factorial(i)) * Ei)


def build_twist(ctx: TwistContext, c: RationalLike = 0) -> TSeries:
    """sum_i (-1)^i/i! T_c^[i] (x) E^i t^i; c = 0 is the twist itself"""
    return _build_twist(ctx, as_rational(c))


def build_inverse_twist(ctx: TwistContext, c: RationalLike = 0) -> TSeries:
    """sum_i 1/i! T_c^<i> (x) E^i t^i, the inverse of build_twist(ctx, c)"""
    return _build_inverse_twist(ctx, as_rational(c))


def build_u(ctx: TwistContext, c: RationalLike = 0) -> TSeries:
    """sum_i 1/i! T_c^[i] E^i t^i; at c = 0 this is mu(Id (x) S0)(twist)"""
    return _build_u(ctx, as_rational(c))


def build_u_inv(ctx: TwistContext, c: RationalLike = 0) -> TSeries:
    """sum_i (-1)^i/i! T_-c^[i] E^i t^i; at c = 0 this inverts build_u"""
    return _build_u_inv(ctx, as_rational(c))


@lru_cache(maxsize=None)
def _twisted_delta_mono(ctx: TwistContext, mono) -> TSeries:
    F = build_twist(ctx)
    F_inv = build_inverse_twist(ctx)
    return F * TSeries.constant(delta0(UElt.mono(mono)), ctx.order) * F_inv


@lru_cache(maxsize=None)
def _twisted_antipode_mono(ctx: TwistContext, mono) -> TSeries:
    u = build_u(ctx)
    u_inv = build_u_inv(ctx)
    return u * TSeries.constant(antipode0(UElt.mono(mono)), ctx.order) * u_inv


def twisted_delta(ctx: TwistContext, x: UElt) -> TSeries:
    """F Delta0(x) F^-1 mod t^(N+1)"""
    total = TSeries.constant(TensorElt.zero(2), ctx.order)
    for mono, c in x.items():
        total = total + _twisted_delta_mono(ctx, mono) * c
    return total


def twisted_antipode(ctx: TwistContext, x: UElt) -> TSeries:
    """u S0(x) u^-1 mod t^(N+1)"""
    total = TSeries.constant(UElt.zero(), ctx.order)
    for mono, c in x.items():
        total = total + _twisted_antipode_mono(ctx, mono) * c
    return total


twisted_counit = counit0


def _left_unit(x: TensorElt) -> TensorElt:
    return outer(x, UElt.one())


def _right_unit(x: TensorElt) -> TensorElt:
    return outer(UElt.one(), x)


def check_cocycle(ctx: TwistContext, twist: Optional[TSeries] = None) -> CocycleReport:
    """
    Check (F (x) 1)(Delta0 (x) Id)(F) = (1 (x) F)(Id (x) Delta0)(F) and the
    two counit conditions.  ``twist`` overrides the built twist (used to
    confirm a corrupted element is caught).
    """
    F = twist if twist is not None else build_twist(ctx)
    lhs = F.map(_left_unit) * F.map(lambda c: tensor_apply((delta0, identity), c))
    rhs = F.map(_right_unit) * F.map(lambda c: tensor_apply((identity, delta0), c))
    unit = TSeries.constant(UElt.one(), F.order)
    report = CocycleReport(context=ctx.describe())
    report.checks.append(AxiomCheck(axiom="cocycle", sample="F", mismatch=compare_values(lhs, rhs)))
    report.checks.append(AxiomCheck(
        axiom="counit-left", sample="F",
        mismatch=compare_values(F.map(lambda c: tensor_apply((counit0, identity), c)), unit)))
    report.checks.append(AxiomCheck(
        axiom="counit-right", sample="F",
        mismatch=compare_values(F.map(lambda c: tensor_apply((identity, counit0), c)), unit)))
    if not report.passed:
        logger.error(f"Twist conditions fail for {ctx.describe()}: "
                     + "; ".join(c.mismatch.describe() for c in report.checks if c.mismatch))
    return report


def check_hopf(
    ctx: TwistContext,
    samples: Iterable[UElt],
    pairs: Sequence[Tuple[UElt, UElt]] = (),
) -> List[AxiomCheck]:
    """
    Hopf axioms for the twisted structure mod t^(N+1).

    Per sample: coassociativity, both counit laws, both antipode laws.
    Per pair: multiplicativity of Delta and eps, anti-multiplicativity of S.
    """
    N = ctx.order

    def delta(u: UElt) -> TSeries:
        return twisted_delta(ctx, u)

    def antipode(u: UElt) -> TSeries:
        return twisted_antipode(ctx, u)

    checks: List[AxiomCheck] = []
    for x in samples:
        label = x.render()
        Dx = delta(x)
        checks.append(AxiomCheck(axiom="coassociativity", sample=label, mismatch=compare_values(
            ts_apply((delta, identity), Dx), ts_apply((identity, delta), Dx))))
        same = TSeries.constant(x, N)
        checks.append(AxiomCheck(axiom="counit-left", sample=label, mismatch=compare_values(
            ts_apply((counit0, identity), Dx), same)))
        checks.append(AxiomCheck(axiom="counit-right", sample=label, mismatch=compare_values(
            ts_apply((identity, counit0), Dx), same)))
        unit = TSeries.constant(UElt.scalar(counit0(x)), N)
        checks.append(AxiomCheck(axiom="antipode-left", sample=label, mismatch=compare_values(
            ts_apply((antipode, identity), Dx).map(mu), unit)))
        checks.append(AxiomCheck(axiom="antipode-right", sample=label, mismatch=compare_values(
            ts_apply((identity, antipode), Dx).map(mu), unit)))

    for x, y in pairs:
        label = f"({x.render()}, {y.render()})"
        xy = x * y
        checks.append(AxiomCheck(axiom="delta-multiplicative", sample=label, mismatch=compare_values(
            delta(xy), delta(x) * delta(y))))
        checks.append(AxiomCheck(axiom="counit-multiplicative", sample=label, mismatch=compare_values(
            counit0(xy), counit0(x) * counit0(y))))
        checks.append(AxiomCheck(axiom="antipode-antimultiplicative", sample=label, mismatch=compare_values(
            antipode(xy), antipode(y) * antipode(x))))

    failed = [c for c in checks if not c.passed]
    if failed:
        logger.error(f"{len(failed)} Hopf axiom checks fail for {ctx.describe()}")
    else:
        logger.debug(f"{len(checks)} Hopf axiom checks pass for {ctx.describe()}")
    return checks


def noncocommutativity_witness(ctx: TwistContext, candidates: Iterable[GenId]) -> Optional[GenId]:
    """First generator x with flip(Delta(x)) != Delta(x) mod t^2, if any"""
    first_order = ctx.with_order(1)
    for g in candidates:
        Dx = twisted_delta(first_order, UElt.gen(g))
        if Dx.map(flip) != Dx:
            return g
    return None


def clear_caches() -> None:
    for cached in (_build_twist, _build_inverse_twist, _build_u, _build_u_inv,
                   _twisted_delta_mono, _twisted_antipode_mono):
        cached.cache_clear()
