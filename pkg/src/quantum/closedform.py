"""
Closed-form coproducts and antipodes of the six quantizations.

Each formula is transcribed as printed, including its coefficient tables,
and evaluated to a truncated series.  ``compare`` checks a transcription
against the twist-conjugation values from ``twist``; disagreements are
reported as paper-discrepancy findings carrying the conjugation value.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from src.algebra.liealg import (
    D, Degree, GenId, Kind, LieElt, bracket_lin, gen, tau_gen,
)
from src.algebra.scalars import LaurentQ, ONE, ZERO, factorial, qpow
from src.algebra.series import TSeries, as_series, one_minus_Et_pow, ts_tensor
from src.algebra.uea import TensorElt, UElt, rising, tau_u, tensor_apply
from src.models.context import Case, TwistContext
from src.models.results import ComparisonReport, Mismatch, TransportReport, Verdict
from src.quantum.compare import compare_values, render_value
from src.quantum.twist import twisted_antipode, twisted_delta
from src.utils.errors import UsageError

logger = logging.getLogger(__name__)


# -- coefficient tables --------------------------------------------------

def _product(i: int, factor: Callable[[int], LaurentQ]) -> LaurentQ:
    value = ONE
    for p in range(1, i + 1):
        value = value * factor(p)
    return value


def _mixed(i: int, m: Degree, n: Degree) -> LaurentQ:
    """(-1)^i prod_p (q^(n2(m1+(p-1)n1)) - q^(n1(m2+(p-1)n2)))"""
    value = _product(i, lambda p: qpow(n[1] * (m[0] + (p - 1) * n[0]))
                     - qpow(n[0] * (m[1] + (p - 1) * n[1])))
    return value if i % 2 == 0 else -value


def _second(i: int, m: Degree, n: Degree) -> LaurentQ:
    """prod_p q^(n1(m2+(p-1)n2))"""
    return _product(i, lambda p: qpow(n[0] * (m[1] + (p - 1) * n[1])))


def _first(i: int, m: Degree, n: Degree) -> LaurentQ:
    """(-1)^i prod_p q^(n2(m1+(p-1)n1))"""
    value = _product(i, lambda p: qpow(n[1] * (m[0] + (p - 1) * n[0])))
    return value if i % 2 == 0 else -value


_GAMMA = {Kind.G: _mixed, Kind.F: _second, Kind.E: _first}
_ETA = {Kind.H: _mixed, Kind.E: _second, Kind.F: _first}


def _kind(y) -> Kind:
    return Kind.from_symbol(y) if isinstance(y, str) else Kind(y)


def gamma(i: int, m: Degree, n: Degree, y) -> LaurentQ:
    """Coefficient table for E = g_n; zero for y = h once i > 0"""
    y = _kind(y)
    if y not in (Kind.E, Kind.F, Kind.G, Kind.H):
        raise UsageError(f"gamma is defined for e, f, g, h; got {y.symbol}")
    if i == 0:
        return ONE
    if y is Kind.H:
        return ZERO
    return _GAMMA[y](i, m, n)


def eta(i: int, m: Degree, n: Degree, y) -> LaurentQ:
    """Coefficient table for E = h_n; zero for y = g once i > 0"""
    y = _kind(y)
    if y not in (Kind.E, Kind.F, Kind.G, Kind.H):
        raise UsageError(f"eta is defined for e, f, g, h; got {y.symbol}")
    if i == 0:
        return ONE
    if y is Kind.G:
        return ZERO
    return _ETA[y](i, m, n)


def rho(i: int, m: Degree, n: Degree, y) -> LaurentQ:
    """
    Coefficient of y_{m+in} in (-ad g_n)^i y_m, computed from the bracket.

    This is an independent route to the commutation coefficients in
    y_m E^j = sum_i C(j,i) rho_i E^(j-i) y_{m+in} for E = g_n.
    """
    y = _kind(y)
    start = gen(y, m)
    if start is None:
        return ZERO
    E = LieElt.of(GenId(Kind.G, *n))
    current = LieElt.of(start)
    for _ in range(i):
        current = bracket_lin(E, current)
    target = gen(y, (m[0] + i * n[0], m[1] + i * n[1]))
    if target is None:
        return ZERO
    value = current.coefficient(target)
    return value if i % 2 == 0 else -value


def alpha_beta(y, m: Degree, n: Degree, variant: str = "alpha") -> LaurentQ:
    """The first-order coefficients for E = e_n (alpha) and E = f_n (beta)"""
    y = _kind(y)
    if variant == "alpha":
        table = {Kind.E: ZERO, Kind.G: qpow(m[1] * n[0]), Kind.H: -qpow(m[0] * n[1])}
    elif variant == "beta":
        table = {Kind.F: ZERO, Kind.G: -qpow(m[0] * n[1]), Kind.H: qpow(m[1] * n[0])}
    else:
        raise UsageError(f"unknown variant {variant!r}; use 'alpha' or 'beta'")
    if y not in table:
        raise UsageError(f"{variant} is not defined for {y.symbol}")
    return table[y]


def s_m(m: Degree, n: Degree) -> LaurentQ:
    """q^(n2 m1 + n1 m2 + n1 n2)"""
    return qpow(n[1] * m[0] + n[0] * m[1] + n[0] * n[1])


def r_value(ctx: TwistContext, m: Degree) -> Fraction:
    """r = x1 m1 + x2 m2"""
    if ctx.x is None:
        raise UsageError(f"r is only defined when T = x1 d1 + x2 d2 (case {ctx.case.value})")
    return ctx.x[0] * m[0] + ctx.x[1] * m[1]


@dataclass(frozen=True)
class CoeffTables:
    """The coefficient tables bound to one context"""
    ctx: TwistContext

    def gamma(self, i: int, m: Degree, y) -> LaurentQ:
        return gamma(i, m, self.ctx.n, y)

    def eta(self, i: int, m: Degree, y) -> LaurentQ:
        return eta(i, m, self.ctx.n, y)

    def rho(self, i: int, m: Degree, y) -> LaurentQ:
        return rho(i, m, self.ctx.n, y)

    def alpha(self, y, m: Degree) -> LaurentQ:
        return alpha_beta(y, m, self.ctx.n, "alpha")

    def beta(self, y, m: Degree) -> LaurentQ:
        return alpha_beta(y, m, self.ctx.n, "beta")

    def s(self, m: Degree) -> LaurentQ:
        return s_m(m, self.ctx.n)

    def r(self, m: Degree) -> Fraction:
        return r_value(self.ctx, m)


# -- formula shapes for the e/f/d/df cases --------------------------------

@dataclass(frozen=True)
class _Shape:
    """What differs between the four first-order-nilpotent cases"""
    plain: Tuple[Kind, ...]      # kinds with the single first-order term
    special: Kind                # kind with the two-branch formulas
    coeff: str                   # "alpha" or "beta"
    delta_target: Kind           # family in the first-order term of Delta(plain)
    antipode_target: Kind        # family in the first-order term of S(plain)
    x_tails: bool                # (1-Et)^r tails; otherwise fixed exponents
    mirrored: bool
    middle: Tuple[Kind, Kind]    # families at m+n in the special formulas
    top: Kind                    # family at m+2n in the special formulas
    tail_kind: Kind              # the y with tail (1-Et)^1 when tails are fixed
    zero_branch_E: bool          # the t^2 term of Delta(special_{-n}) carries E
    antipode_zero: Kind          # family at -n in S(special_{-n})


_SHAPES: Dict[Case, _Shape] = {
    Case.E: _Shape((Kind.E, Kind.G, Kind.H), Kind.F, "alpha", Kind.E, Kind.E, True, False,
                   (Kind.H, Kind.G), Kind.E, Kind.E, True, Kind.F),
    Case.D: _Shape((Kind.E, Kind.G, Kind.H), Kind.F, "alpha", Kind.E, Kind.E, False, False,
                   (Kind.H, Kind.G), Kind.E, Kind.E, False, Kind.F),
    Case.F: _Shape((Kind.F, Kind.G, Kind.H), Kind.E, "beta", Kind.F, Kind.F, True, True,
                   (Kind.G, Kind.H), Kind.F, Kind.F, True, Kind.E),
    # As printed: the first-order term of Delta(y_m) names e_{m+n}, and the
    # zero branch of S(e_m) names f_{-n}.
    Case.DF: _Shape((Kind.F, Kind.G, Kind.H), Kind.E, "beta", Kind.E, Kind.F, False, True,
                    (Kind.G, Kind.H), Kind.F, Kind.F, False, Kind.F),
}


class _Forms:
    """Series-building vocabulary for one context"""

    def __init__(self, ctx: TwistContext):
        self.ctx = ctx
        self.N = ctx.order
        self.n = ctx.n
        self.T = ctx.T
        self.E = ctx.E_elt
        self.one = UElt.one()
        self.T1 = rising(self.T, 1, 1)
        self.T1_2 = rising(self.T, 1, 2)

    def P(self, r) -> TSeries:
        return one_minus_Et_pow(self.E, r, self.N)

    def u(self, kind: Kind, m: Degree) -> UElt:
        return UElt.gen(gen(kind, m))

    def s(self, x) -> TSeries:
        return as_series(x, self.N)

    def tens(self, a, b) -> TSeries:
        return ts_tensor(self.s(a), self.s(b))

    def zero2(self) -> TSeries:
        return TSeries.constant(TensorElt.zero(2), self.N)

    def zero1(self) -> TSeries:
        return TSeries.constant(UElt.zero(), self.N)

    def primitive(self, x: UElt) -> TSeries:
        return self.tens(x, self.one) + self.tens(self.one, x)


def _plus_n(m: Degree, n: Degree, k: int = 1) -> Degree:
    return (m[0] + k * n[0], m[1] + k * n[1])


def _derivation_delta(f: _Forms, g: GenId) -> TSeries:
    n_i = f.n[0] if g.kind is Kind.D1 else f.n[1]
    x = UElt.gen(g)
    return (f.primitive(x) - f.tens(f.T, f.one) * n_i + f.tens(f.T, f.P(-1)) * n_i)


def _derivation_antipode(f: _Forms, g: GenId) -> TSeries:
    n_i = f.n[0] if g.kind is Kind.D1 else f.n[1]
    return f.s(-UElt.gen(g)) + f.s(f.T * f.E * n_i).shift(1)


def _graded_delta_x(f: _Forms, g: GenId) -> TSeries:
    """E = g_n or h_n: the full j-sum"""
    table = gamma if f.ctx.case is Case.G else eta
    y, m = g.kind, g.degree
    total = f.tens(UElt.gen(g), f.P(r_value(f.ctx, m)))
    for j in range(f.N + 1):
        coeff = table(j, m, f.n, y)
        if not coeff:
            continue
        target = f.u(y, _plus_n(m, f.n, j))
        if not target:
            continue
        term = f.tens(rising(f.T, 0, j), f.P(-j) * target) * (coeff * (1 / factorial(j)))
        total = total + term.shift(j)
    return total


def _graded_antipode_x(f: _Forms, g: GenId) -> TSeries:
    table = gamma if f.ctx.case is Case.G else eta
    y, m = g.kind, g.degree
    P = f.P(-r_value(f.ctx, m))
    total = f.zero1()
    for j in range(f.N + 1):
        coeff = table(j, m, f.n, y)
        if not coeff:
            continue
        target = f.u(y, _plus_n(m, f.n, j))
        if not target:
            continue
        sign = 1 if j % 2 else -1
        term = P * (target * rising(f.T, 1, j)) * (coeff * (Fraction(sign) / factorial(j)))
        total = total + term.shift(j)
    return total


def _shape_delta(f: _Forms, shape: _Shape, g: GenId) -> TSeries:
    y, m, n = g.kind, g.degree, f.n
    sign = -1 if shape.mirrored else 1

    if y is Kind.D:
        return f.primitive(UElt.gen(D)) + (f.tens(f.T, f.P(-1) * f.E) * (2 * sign)).shift(1)

    if y in shape.plain:
        if shape.x_tails:
            tail = r_value(f.ctx, m)
        else:
            tail = 1 if y is shape.tail_kind else 0
        coeff = alpha_beta(y, m, n, shape.coeff)
        total = f.tens(UElt.gen(g), f.P(tail)) + f.tens(f.one, UElt.gen(g))
        if coeff:
            target = f.u(shape.delta_target, _plus_n(m, n))
            total = total + (f.tens(f.T, f.P(-1) * target) * coeff).shift(1)
        return total

    if y is shape.special:
        z = UElt.gen(g)
        if _plus_n(m, n) != (0, 0):
            a = r_value(f.ctx, m) if shape.x_tails else -1
            first, second = shape.middle
            mid = _plus_n(m, n)
            total = (f.tens(f.T, f.P(-1) * f.u(first, mid)) * qpow(m[1] * n[0])).shift(1)
            total = total - (f.tens(f.T, f.P(-1) * f.u(second, mid)) * qpow(m[0] * n[1])).shift(1)
            total = total + f.tens(z, f.P(a)) + f.tens(f.one, z)
            top = f.u(shape.top, _plus_n(m, n, 2))
            total = total - (f.tens(rising(f.T, 0, 2), f.P(-2) * top) * s_m(m, n)).shift(2)
            return total
        scale = qpow(-n[0] * n[1])
        last = f.E if shape.zero_branch_E else f.one
        total = f.tens(z, f.P(-1)) + f.tens(f.one, z)
        total = total + (f.tens(f.T, f.P(-1) * UElt.gen(D)) * (scale * (-sign))).shift(1)
        total = total - (f.tens(rising(f.T, 0, 2), f.P(-2) * last) * scale).shift(2)
        return total

    raise UsageError(f"no closed form for {g} in case {f.ctx.case.value}")


def _shape_antipode(f: _Forms, shape: _Shape, g: GenId) -> TSeries:
    y, m, n = g.kind, g.degree, f.n
    sign = -1 if shape.mirrored else 1

    if y is Kind.D:
        return f.s(-UElt.gen(D)) + f.s(f.E * f.T1 * (2 * sign)).shift(1)

    if y in shape.plain:
        coeff = alpha_beta(y, m, n, shape.coeff)
        if shape.x_tails:
            tail = f.P(r_value(f.ctx, m))
            prefix = tail
        else:
            tail = f.P(1 if y is shape.tail_kind else 0)
            prefix = f.s(f.one)
        total = -(tail * UElt.gen(g))
        if coeff:
            target = f.u(shape.antipode_target, _plus_n(m, n))
            total = total + (prefix * (target * f.T1) * coeff).shift(1)
        return total

    if y is shape.special:
        if _plus_n(m, n) != (0, 0):
            P = f.P(r_value(f.ctx, m)) if shape.x_tails else f.P(-1)
            first, second = shape.middle
            mid = _plus_n(m, n)
            x_first = f.u(first, mid) * f.T1
            # the fixed-exponent cases print T_1 to the left of the second term
            x_second = f.u(second, mid) * f.T1 if shape.x_tails else f.T1 * f.u(second, mid)
            total = (P * x_first * qpow(m[1] * n[0])).shift(1)
            total = total - (P * x_second * qpow(m[0] * n[1])).shift(1)
            total = total - P * UElt.gen(g)
            top = f.u(shape.top, _plus_n(m, n, 2))
            total = total + (P * (top * f.T1_2) * s_m(m, n)).shift(2)
            return total
        scale = qpow(-n[0] * n[1])
        P = f.P(-1)
        total = (P * (f.E * f.T1_2) * scale).shift(2)
        total = total - P * f.u(shape.antipode_zero, (-n[0], -n[1]))
        total = total + (P * (UElt.gen(D) * f.T1) * (scale * (-sign))).shift(1)
        return total

    raise UsageError(f"no closed form for {g} in case {f.ctx.case.value}")


def cf_delta(ctx: TwistContext, x: Optional[GenId]) -> TSeries:
    """The printed coproduct of a generator (None stands for the unit)"""
    f = _Forms(ctx)
    if x is None:
        return f.tens(f.one, f.one)
    if x.kind in (Kind.D1, Kind.D2):
        return _derivation_delta(f, x)
    if ctx.case in (Case.G, Case.H):
        if x.kind is Kind.D:
            return f.primitive(UElt.gen(D))
        return _graded_delta_x(f, x)
    return _shape_delta(f, _SHAPES[ctx.case], x)


def cf_antipode(ctx: TwistContext, x: Optional[GenId]) -> TSeries:
    """The printed antipode of a generator, with T_(1-c) read at c = 0"""
    f = _Forms(ctx)
    if x is None:
        return f.s(f.one)
    if x.kind in (Kind.D1, Kind.D2):
        return _derivation_antipode(f, x)
    if ctx.case in (Case.G, Case.H):
        if x.kind is Kind.D:
            return f.s(-UElt.gen(D))
        return _graded_antipode_x(f, x)
    return _shape_antipode(f, _SHAPES[ctx.case], x)


# -- comparison ---------------------------------------------------------

def compare(ctx: TwistContext, x: Optional[GenId]) -> ComparisonReport:
    """
    Printed closed forms vs. conjugation by the twist, mod t^(N+1).

    The first disagreeing map (coproduct before antipode) is reported with
    its lowest differing t-order, basis term and both coefficients.
    """
    element = UElt.one() if x is None else UElt.gen(x)
    base = dict(
        case=ctx.case.value,
        generator="1" if x is None else str(x),
        m=None if x is None or not x.kind.is_graded else x.degree,
        n=ctx.n,
        order=ctx.order,
    )
    for name, printed, oracle in (
        ("delta", cf_delta(ctx, x), twisted_delta(ctx, element)),
        ("antipode", cf_antipode(ctx, x), twisted_antipode(ctx, element)),
    ):
        found = compare_values(printed, oracle)
        if found is not None:
            report = ComparisonReport(
                **base, verdict=Verdict.DISCREPANCY, map=name,
                first_mismatch_order=found.order, term=found.term,
                lhs=found.lhs, rhs=found.rhs, oracle=render_value(oracle),
            )
            logger.warning(f"[{ctx.describe()}] {report.describe()}")
            return report
    return ComparisonReport(**base, verdict=Verdict.PASS)


def _tau_tensor(s: TSeries) -> TSeries:
    return s.map(lambda c: tensor_apply((tau_u, tau_u), c))


def mirror_transport_check(ctx_base: TwistContext, ctx_mirror: TwistContext, x: Optional[GenId]) -> TransportReport:
    """
    Check that the mirror case is the involution image of the base case:
    Delta'(x) = (tau (x) tau) Delta(tau x) and S'(x) = tau S(tau x), both for
    the printed closed forms and for the conjugation values.

    Raises:
        UsageError: when ctx_mirror is not the mirror of ctx_base
    """
    if ctx_base.case.is_mirror or ctx_mirror.case is not ctx_base.case.mirror:
        raise UsageError(f"case {ctx_mirror.case.value} is not the mirror of case {ctx_base.case.value}")
    if (ctx_base.n, ctx_base.x, ctx_base.order) != (ctx_mirror.n, ctx_mirror.x, ctx_mirror.order):
        raise UsageError("mirror contexts must share n, x and order")

    if x is None:
        image, sign = None, 1
        element, image_element = UElt.one(), UElt.one()
    else:
        image, sign = tau_gen(x)
        element, image_element = UElt.gen(x), UElt.gen(image)

    printed: List[Mismatch] = []
    for lhs, rhs in (
        (cf_delta(ctx_mirror, x), _tau_tensor(cf_delta(ctx_base, image)) * sign),
        (cf_antipode(ctx_mirror, x), cf_antipode(ctx_base, image).map(tau_u) * sign),
    ):
        found = compare_values(lhs, rhs)
        if found is not None:
            printed.append(found)

    oracle: List[Mismatch] = []
    for lhs, rhs in (
        (twisted_delta(ctx_mirror, element), _tau_tensor(twisted_delta(ctx_base, image_element)) * sign),
        (twisted_antipode(ctx_mirror, element), twisted_antipode(ctx_base, image_element).map(tau_u) * sign),
    ):
        found = compare_values(lhs, rhs)
        if found is not None:
            oracle.append(found)

    if oracle:
        verdict = Verdict.FAIL
    elif printed:
        verdict = Verdict.DISCREPANCY
    else:
        verdict = Verdict.PASS
    report = TransportReport(
        case=ctx_base.case.value, mirror=ctx_mirror.case.value,
        generator="1" if x is None else str(x), order=ctx_mirror.order,
        verdict=verdict, closed_form=printed, oracle=oracle,
    )
    if verdict is Verdict.FAIL:
        logger.error(report.describe())
    elif verdict is Verdict.DISCREPANCY:
        logger.warning(report.describe())
    return report
