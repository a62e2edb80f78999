"""
Both sides of the factorial, commutation and conjugation identities the
closed forms are derived from.

Every builder returns ``(lhs, rhs)`` for one parameter point: U-elements
for the finite identities, truncated series for those involving the twist
families.  Right-hand sides are written as printed; the suites decide
whether a disagreement is a failure or a discrepancy.
"""
from fractions import Fraction
from typing import Tuple, Union

from src.algebra.liealg import D, Degree, GenId, Kind, gen
from src.algebra.scalars import factorial, gen_binomial, qpow
from src.algebra.series import TSeries, one_minus_Et_pow, ts_inverse, ts_tensor
from src.algebra.uea import (
    TensorElt, UElt, antipode0, delta0, falling, identity, mu, outer, rising,
    tensor_apply,
)
from src.models.context import Case, TwistContext
from src.quantum.closedform import gamma, r_value, s_m
from src.quantum.twist import build_inverse_twist, build_twist, build_u, build_u_inv
from src.utils.errors import UsageError

Side = Union[UElt, TSeries]
Sides = Tuple[Side, Side]


def _u(kind, m: Degree = (0, 0)) -> UElt:
    return UElt.gen(gen(kind, m))


def _plus(m: Degree, n: Degree, k: int = 1) -> Degree:
    return (m[0] + k * n[0], m[1] + k * n[1])


def shift_of(ctx: TwistContext, g: GenId) -> Fraction:
    """The w with [T, g] = w g"""
    if not g.kind.is_graded:
        return Fraction(0)
    if ctx.case.uses_x:
        return r_value(ctx, g.degree)
    w = {Kind.E: 1, Kind.F: -1}.get(g.kind, 0)
    return Fraction(-w if ctx.case is Case.DF else w)


def derivation_weight(ctx: TwistContext, g: GenId) -> int:
    """n_k for d_k"""
    if g.kind is Kind.D1:
        return ctx.n[0]
    if g.kind is Kind.D2:
        return ctx.n[1]
    raise UsageError(f"{g} is not a degree derivation")


# -- factorial identities ----------------------------------------------

def rising_split(x: UElt, a, r: int, s: int) -> Sides:
    return rising(x, a, r + s), rising(x, a, r) * rising(x, a + r, s)


def falling_split(x: UElt, a, r: int, s: int) -> Sides:
    return falling(x, a, r + s), falling(x, a, r) * falling(x, a - r, s)


def falling_as_rising(x: UElt, a, r: int) -> Sides:
    return falling(x, a, r), rising(x, a - r + 1, r)


def mixed_binomial(x: UElt, a, d, m: int) -> Sides:
    total = UElt.zero()
    for r in range(m + 1):
        s = m - r
        coeff = Fraction((-1) ** s) / (factorial(r) * factorial(s))
        total = total + (falling(x, a, r) * rising(x, d, s)).scale(coeff)
    return total, UElt.scalar(gen_binomial(a - d, m))


def falling_binomial(x: UElt, a, d, m: int) -> Sides:
    total = UElt.zero()
    for r in range(m + 1):
        s = m - r
        coeff = Fraction((-1) ** s) / (factorial(r) * factorial(s))
        total = total + (falling(x, a, r) * falling(x, d - r, s)).scale(coeff)
    return total, UElt.scalar(gen_binomial(a - d + m - 1, m))


# -- relations among the twist families ----------------------------------

def twist_times_inverse(ctx: TwistContext, c, d) -> Sides:
    """twist_c * inverse_d = 1 (x) (1 - Et)^(c-d)"""
    lhs = build_twist(ctx, c) * build_inverse_twist(ctx, d)
    unit = TSeries.constant(UElt.one(), ctx.order)
    return lhs, ts_tensor(unit, one_minus_Et_pow(ctx.E_elt, c - d, ctx.order))


def u_times_u_inv(ctx: TwistContext, c, d) -> Sides:
    """u_c * u_inv_d = (1 - Et)^-(c+d)"""
    lhs = build_u(ctx, c) * build_u_inv(ctx, d)
    return lhs, one_minus_Et_pow(ctx.E_elt, -(c + d), ctx.order)


def u_from_twist(ctx: TwistContext, c) -> Sides:
    rhs = build_twist(ctx, c).map(lambda x: mu(tensor_apply((identity, antipode0), x)))
    return build_u(ctx, c), rhs


def u_inv_from_inverse(ctx: TwistContext, c) -> Sides:
    rhs = build_inverse_twist(ctx, c).map(lambda x: mu(tensor_apply((antipode0, identity), x)))
    return build_u_inv(ctx, c), rhs


def twist_inverse(ctx: TwistContext, c) -> Sides:
    return ts_inverse(build_twist(ctx, c)), build_inverse_twist(ctx, c)


def u_inverse(ctx: TwistContext, c) -> Sides:
    return ts_inverse(build_u(ctx, c)), build_u_inv(ctx, -c)


def delta_falling(ctx: TwistContext, c, m: int) -> Sides:
    """Delta0(T^[m]) = sum_i C(m,i) T_-c^[i] (x) T_c^[m-i]"""
    T = ctx.T
    rhs = TensorElt.zero(2)
    for i in range(m + 1):
        rhs = rhs + outer(falling(T, -c, i), falling(T, c, m - i)).scale(gen_binomial(m, i))
    return delta0(falling(T, 0, m)), rhs


# -- commutation with E^j ----------------------------------------------

def shift_past_factorial(ctx: TwistContext, g: GenId, c, i: int, kind: str = "falling") -> Sides:
    """g T_c^(i) = T_(c-w)^(i) g for both factorial kinds"""
    fn = falling if kind == "falling" else rising
    w = shift_of(ctx, g)
    x = UElt.gen(g)
    return x * fn(ctx.T, c, i), fn(ctx.T, c - w, i) * x


def _E_pow(ctx: TwistContext, k: int) -> UElt:
    if k < 0:
        return UElt.zero()
    return ctx.E_elt ** k


def weighted_power(ctx: TwistContext, g: GenId, weight, j: int) -> Sides:
    """g E^j = E^j g + j*weight E^j"""
    x = UElt.gen(g)
    Ej = _E_pow(ctx, j)
    return x * Ej, Ej * x + Ej.scale(Fraction(j) * weight)


def adjoint_power(ctx: TwistContext, y: Kind, m: Degree, j: int) -> Sides:
    """y_m E^j = sum_i C(j,i) gamma_i E^(j-i) y_(m+in) for E = g_n"""
    n = ctx.n
    rhs = UElt.zero()
    for i in range(j + 1):
        coeff = gamma(i, m, n, y)
        if coeff:
            rhs = rhs + (_E_pow(ctx, j - i) * _u(y, _plus(m, n, i))).scale(coeff * gen_binomial(j, i))
    return _u(y, m) * _E_pow(ctx, j), rhs


def f_past_power(ctx: TwistContext, m: Degree, j: int) -> Sides:
    """f_m E^j for E = e_n, both branches"""
    n = ctx.n
    Ej = _E_pow(ctx, j)
    lhs = _u(Kind.F, m) * Ej
    if _plus(m, n) != (0, 0):
        mid = _plus(m, n)
        rhs = Ej * _u(Kind.F, m)
        rhs = rhs + (_E_pow(ctx, j - 1) * _u(Kind.H, mid)).scale(qpow(m[1] * n[0]) * j)
        rhs = rhs - (_E_pow(ctx, j - 1) * _u(Kind.G, mid)).scale(qpow(m[0] * n[1]) * j)
        rhs = rhs - (_E_pow(ctx, j - 2) * _u(Kind.E, _plus(m, n, 2))).scale(
            s_m(m, n) * (2 * gen_binomial(j, 2)))
        return lhs, rhs
    rhs = Ej * _u(Kind.F, (-n[0], -n[1]))
    rhs = rhs - (_E_pow(ctx, j - 1) * UElt.gen(D)).scale(qpow(-n[0] * n[1]) * j)
    rhs = rhs - _E_pow(ctx, j - 1).scale(qpow(-n[1] * n[0]) * (2 * gen_binomial(j, 2)))
    return lhs, rhs


def g_past_power(ctx: TwistContext, m: Degree, j: int) -> Sides:
    n = ctx.n
    Ej = _E_pow(ctx, j)
    rhs = Ej * _u(Kind.G, m) + (_E_pow(ctx, j - 1) * _u(Kind.E, _plus(m, n))).scale(qpow(m[1] * n[0]) * j)
    return _u(Kind.G, m) * Ej, rhs


def h_past_power(ctx: TwistContext, m: Degree, j: int) -> Sides:
    n = ctx.n
    Ej = _E_pow(ctx, j)
    rhs = Ej * _u(Kind.H, m) - (_E_pow(ctx, j - 1) * _u(Kind.E, _plus(m, n))).scale(qpow(m[0] * n[1]) * j)
    return _u(Kind.H, m) * Ej, rhs


# -- conjugation of the twist families ------------------------------------

class _Conj:
    """Shorthand for series built from one context"""

    def __init__(self, ctx: TwistContext):
        self.ctx = ctx
        self.N = ctx.order
        self.T = ctx.T
        self.E = ctx.E_elt
        self.one = UElt.one()

    def I(self, c) -> TSeries:
        return build_inverse_twist(self.ctx, c)

    def J(self, c) -> TSeries:
        return build_u_inv(self.ctx, c)

    def L(self, x: UElt) -> TSeries:
        return TSeries.constant(outer(x, self.one), self.N)

    def R(self, x: UElt) -> TSeries:
        return TSeries.constant(outer(self.one, x), self.N)

    def U(self, x: UElt) -> TSeries:
        return TSeries.constant(x, self.N)

    def pair(self, a: UElt, b: UElt, power: int) -> TSeries:
        """(a (x) b) t^power"""
        return TSeries.monomial(outer(a, b), power, self.N)

    def mono(self, x: UElt, power: int) -> TSeries:
        return TSeries.monomial(x, power, self.N)

    def Tc(self, c) -> UElt:
        return self.T + c

    def T1(self, c, k: int = 1) -> UElt:
        """T_(1-c)^<k>"""
        return rising(self.T, 1 - c, k)


def left_leg_shift(ctx: TwistContext, g: GenId, c) -> Sides:
    """(g (x) 1) I_c = I_(c-w) (g (x) 1)"""
    k = _Conj(ctx)
    x = UElt.gen(g)
    return k.L(x) * k.I(c), k.I(c - shift_of(ctx, g)) * k.L(x)


def right_derivation(ctx: TwistContext, g: GenId, c) -> Sides:
    k = _Conj(ctx)
    x = UElt.gen(g)
    rhs = k.I(c + 1) * k.pair(k.Tc(c), k.E, 1) * derivation_weight(ctx, g) + k.I(c) * k.R(x)
    return k.R(x) * k.I(c), rhs


def right_central(ctx: TwistContext, g: GenId, c) -> Sides:
    k = _Conj(ctx)
    x = UElt.gen(g)
    return k.R(x) * k.I(c), k.I(c) * k.R(x)


def right_adjoint(ctx: TwistContext, y: Kind, m: Degree, c) -> Sides:
    """(1 (x) y_m) I_c = sum_i gamma_i/i! I_(c+i) (T_c^<i> (x) y_(m+in) t^i)"""
    k = _Conj(ctx)
    n = ctx.n
    rhs = TSeries.constant(TensorElt.zero(2), k.N)
    for i in range(k.N + 1):
        coeff = gamma(i, m, n, y)
        if coeff:
            term = k.I(c + i) * k.pair(rising(k.T, c, i), _u(y, _plus(m, n, i)), i)
            rhs = rhs + term * (coeff * (1 / factorial(i)))
    return k.R(_u(y, m)) * k.I(c), rhs


def right_f(ctx: TwistContext, m: Degree, c) -> Sides:
    """(1 (x) f_m) I_c for E = e_n, both branches"""
    k = _Conj(ctx)
    n = ctx.n
    lhs = k.R(_u(Kind.F, m)) * k.I(c)
    if _plus(m, n) != (0, 0):
        mid = _plus(m, n)
        rhs = k.I(c + 1) * k.pair(k.Tc(c), _u(Kind.H, mid), 1) * qpow(m[1] * n[0])
        rhs = rhs - k.I(c + 1) * k.pair(k.Tc(c), _u(Kind.G, mid), 1) * qpow(m[0] * n[1])
        rhs = rhs + k.I(c) * k.R(_u(Kind.F, m))
        rhs = rhs - k.I(c + 2) * k.pair(rising(k.T, c, 2), _u(Kind.E, _plus(m, n, 2)), 2) * s_m(m, n)
        return lhs, rhs
    rhs = k.I(c) * k.R(_u(Kind.F, m))
    rhs = rhs - k.I(c + 1) * k.pair(k.Tc(c), UElt.gen(D), 1) * qpow(-n[1] * n[0])
    rhs = rhs - k.I(c + 2) * k.pair(rising(k.T, c, 2), k.E, 2) * qpow(-n[0] * n[1])
    return lhs, rhs


def right_g(ctx: TwistContext, m: Degree, c) -> Sides:
    k = _Conj(ctx)
    n = ctx.n
    x = _u(Kind.G, m)
    rhs = k.I(c) * k.R(x) + k.I(c + 1) * k.pair(k.Tc(c), _u(Kind.E, _plus(m, n)), 1) * qpow(m[1] * n[0])
    return k.R(x) * k.I(c), rhs


def right_h(ctx: TwistContext, m: Degree, c) -> Sides:
    k = _Conj(ctx)
    n = ctx.n
    x = _u(Kind.H, m)
    rhs = k.I(c) * k.R(x) - k.I(c + 1) * k.pair(k.Tc(c), _u(Kind.E, _plus(m, n)), 1) * qpow(m[0] * n[1])
    return k.R(x) * k.I(c), rhs


def right_d(ctx: TwistContext, c) -> Sides:
    k = _Conj(ctx)
    x = UElt.gen(D)
    rhs = k.I(c) * k.R(x) + k.I(c + 1) * k.pair(k.Tc(c), k.E, 1) * 2
    return k.R(x) * k.I(c), rhs


def u_shift(ctx: TwistContext, g: GenId, c) -> Sides:
    """g J_c = J_(c+w) g"""
    k = _Conj(ctx)
    x = UElt.gen(g)
    return k.U(x) * k.J(c), k.J(c + shift_of(ctx, g)) * k.U(x)


def u_derivation(ctx: TwistContext, g: GenId, c) -> Sides:
    k = _Conj(ctx)
    x = UElt.gen(g)
    rhs = k.J(c) * k.U(x) - k.J(c) * k.mono(k.Tc(-c) * k.E, 1) * derivation_weight(ctx, g)
    return k.U(x) * k.J(c), rhs


def u_adjoint(ctx: TwistContext, y: Kind, m: Degree, c) -> Sides:
    """y_m J_c = J_(c+r) sum_j (-1)^j gamma_j/j! y_(m+jn) T_(1-c)^<j> t^j"""
    k = _Conj(ctx)
    n = ctx.n
    inner = TSeries.constant(UElt.zero(), k.N)
    for j in range(k.N + 1):
        coeff = gamma(j, m, n, y)
        if coeff:
            term = k.mono(_u(y, _plus(m, n, j)) * k.T1(c, j), j)
            inner = inner + term * (coeff * (Fraction((-1) ** j) / factorial(j)))
    w = r_value(ctx, m)
    return k.U(_u(y, m)) * k.J(c), k.J(c + w) * inner


def u_f(ctx: TwistContext, m: Degree, c) -> Sides:
    """f_m J_c for E = e_n; the zero branch prints q^(n1 n2) for T = x.d and q^(-n1 n2) for T = d/2"""
    k = _Conj(ctx)
    n = ctx.n
    x = _u(Kind.F, m)
    w = shift_of(ctx, GenId(Kind.F, *m))
    J = k.J(c + w)
    lhs = k.U(x) * k.J(c)
    if _plus(m, n) != (0, 0):
        mid = _plus(m, n)
        rhs = J * k.mono(k.Tc(-c - w) * _u(Kind.G, mid), 1) * qpow(m[0] * n[1])
        rhs = rhs - J * k.mono(_u(Kind.H, mid) * k.T1(c), 1) * qpow(m[1] * n[0])
        rhs = rhs + J * k.U(x)
        rhs = rhs - J * k.mono(_u(Kind.E, _plus(m, n, 2)) * k.T1(c, 2), 2) * s_m(m, n)
        return lhs, rhs
    scale = qpow(n[0] * n[1]) if ctx.case.uses_x else qpow(-n[0] * n[1])
    rhs = J * k.U(x)
    rhs = rhs + J * k.mono(UElt.gen(D) * k.T1(c), 1) * scale
    rhs = rhs - J * k.mono(k.E * k.T1(c, 2), 2) * scale
    return lhs, rhs


def u_g(ctx: TwistContext, m: Degree, c) -> Sides:
    k = _Conj(ctx)
    n = ctx.n
    x = _u(Kind.G, m)
    J = k.J(c + shift_of(ctx, GenId(Kind.G, *m)))
    rhs = J * k.U(x) - J * k.mono(_u(Kind.E, _plus(m, n)) * k.T1(c), 1) * qpow(n[0] * m[1])
    return k.U(x) * k.J(c), rhs


def u_h(ctx: TwistContext, m: Degree, c) -> Sides:
    k = _Conj(ctx)
    n = ctx.n
    x = _u(Kind.H, m)
    J = k.J(c + shift_of(ctx, GenId(Kind.H, *m)))
    rhs = J * k.U(x) + J * k.mono(_u(Kind.E, _plus(m, n)) * k.T1(c), 1) * qpow(n[1] * m[0])
    return k.U(x) * k.J(c), rhs


def u_d(ctx: TwistContext, c) -> Sides:
    k = _Conj(ctx)
    x = UElt.gen(D)
    rhs = k.J(c) * k.U(x) - k.J(c) * k.mono(k.E * k.T1(c), 1) * 2
    return k.U(x) * k.J(c), rhs
