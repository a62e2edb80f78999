"""
Truncated power series in t with coefficients in U or in a tensor power of U.

A series of order N stores the coefficients of t^0 .. t^N; all arithmetic
is exact modulo t^(N+1) and mixing orders truncates to the smaller one.
"""
import logging
from typing import Callable, List, NamedTuple, Optional, Sequence, Union

from src.algebra.scalars import RationalLike, as_rational, coerce_scalar, gen_binomial
from src.algebra.uea import (
    Element, PBWMono, TensorElt, UElt, element_arity, outer,
)
from src.algebra.liealg import GenId
from src.utils.errors import UsageError

logger = logging.getLogger(__name__)


def _zero_like(x: Element) -> Element:
    return 0 * x


class TSeries:
    """c_0 + c_1 t + ... + c_N t^N  (mod t^(N+1))"""

    __slots__ = ("_coeffs", "arity")

    def __init__(self, coeffs: Sequence[Element]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise UsageError("a series needs at least its t^0 coefficient")
        arities = {element_arity(c) for c in coeffs}
        if len(arities) != 1:
            raise UsageError(f"series coefficients of mixed kinds: arities {sorted(arities)}")
        self._coeffs = coeffs
        self.arity = arities.pop()

    @classmethod
    def constant(cls, x: Element, order: int) -> "TSeries":
        zero = _zero_like(x)
        return cls((x,) + (zero,) * order)

    @classmethod
    def monomial(cls, x: Element, power: int, order: int) -> "TSeries":
        """x t^power, which is zero when power > order"""
        zero = _zero_like(x)
        coeffs = [zero] * (order + 1)
        if power <= order:
            coeffs[power] = x
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, power: int) -> Element:
        return self._coeffs[power]

    def truncate(self, order: int) -> "TSeries":
        if order >= self.order:
            return self
        return TSeries(self._coeffs[:order + 1])

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def shift(self, power: int) -> "TSeries":
        """Multiply by t^power, keeping the order"""
        if power <= 0:
            return self
        zero = _zero_like(self._coeffs[0])
        kept = self._coeffs[:max(self.order + 1 - power, 0)]
        return TSeries((zero,) * min(power, self.order + 1) + kept)

    def map(self, fn: Callable[[Element], Element]) -> "TSeries":
        return TSeries([fn(c) for c in self._coeffs])

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "TSeries") -> int:
        if other.arity != self.arity:
            raise UsageError(f"series kinds differ: arity {self.arity} vs {other.arity}")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return ts_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return ts_add(self, -other)

    def __neg__(self) -> "TSeries":
        return TSeries([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, TSeries):
            return ts_mul(self, other)
        if element_arity(other) not in (0, self.arity):
            raise UsageError("element and series coefficients differ in kind")
        return TSeries([c * other for c in self._coeffs])

    def __rmul__(self, other):
        if element_arity(other) not in (0, self.arity):
            raise UsageError("element and series coefficients differ in kind")
        return TSeries([other * c for c in self._coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.arity == other.arity and self._coeffs == other._coeffs

    __hash__ = None

    def render(self) -> str:
        from src.cli.render import render_series
        return render_series(self)

    __str__ = render

    def __repr__(self) -> str:
        return f"TSeries({self.render()!r})"


def ts_add(a: TSeries, b: TSeries) -> TSeries:
    """Sum modulo t^(min order + 1)"""
    n = a._check(b)
    return TSeries([a[k] + b[k] for k in range(n + 1)])


def ts_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product modulo t^(min order + 1)"""
    n = a._check(b)
    out = [_zero_like(a[0] * b[0]) for _ in range(n + 1)]
    for i in range(n + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if not bj:
                continue
            out[i + j] = out[i + j] + ai * bj
    return TSeries(out)


def _unit_like(x: Element) -> Element:
    if isinstance(x, TensorElt):
        return TensorElt.one(x.arity)
    if isinstance(x, UElt):
        return UElt.one()
    return 1


def ts_inverse(a: TSeries) -> TSeries:
    """
    Two-sided inverse modulo t^(N+1).

    Raises:
        UsageError: when the constant term is not an invertible scalar
    """
    head = a[0]
    if isinstance(head, (UElt, TensorElt)):
        if not head.is_scalar():
            raise UsageError("series constant term is not a scalar; cannot invert")
        scalar = head.scalar_part()
    else:
        scalar = coerce_scalar(head)
    try:
        inv = scalar.inverse()
    except ZeroDivisionError:
        raise UsageError(f"series constant term {scalar} is not invertible") from None

    out = [inv * _unit_like(head)]
    for k in range(1, a.order + 1):
        acc = _zero_like(head)
        for j in range(1, k + 1):
            if a[j]:
                acc = acc + a[j] * out[k - j]
        out.append(-inv * acc)
    return TSeries(out)


def one_minus_Et_pow(E: Union[UElt, GenId], r: RationalLike, N: int) -> TSeries:
    """(1 - E t)^r = sum_k binom(r, k) (-1)^k E^k t^k"""
    if isinstance(E, GenId):
        E = UElt.gen(E)
    r = as_rational(r)
    coeffs = []
    power = UElt.one()
    for k in range(N + 1):
        c = gen_binomial(r, k) * (-1) ** k
        coeffs.append(power.scale(c))
        power = power * E
    return TSeries(coeffs)


def ts_tensor(a: TSeries, b: TSeries) -> TSeries:
    """Outer product of series: (sum a_i t^i) (x) (sum b_j t^j)"""
    n = min(a.order, b.order)
    out: List[Optional[Element]] = [None] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            term = outer(a[i], b[j])
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return TSeries(out)


def as_series(x: Union[TSeries, Element], order: int) -> TSeries:
    if isinstance(x, TSeries):
        return x.truncate(order)
    return TSeries.constant(x, order)


def ts_apply(maps: Sequence[Callable[[UElt], Union[TSeries, Element]]], s: TSeries) -> TSeries:
    """
    Apply per-leg maps to a tensor-valued series.

    A map may return a plain element or a series (the twisted coproduct,
    for instance); series images are multiplied out in t.
    """
    if s.arity != len(maps):
        raise UsageError(f"{len(maps)} maps for a series of arity {s.arity}")
    N = s.order
    template = outer(*[as_series(fn(UElt.one()), 0)[0] for fn in maps])
    zero = _zero_like(template)
    acc: List[Element] = [zero] * (N + 1)
    for i, coeff in enumerate(s.coeffs):
        for key, c in coeff.items():
            legs = [as_series(fn(UElt.mono(m)), N - i) for fn, m in zip(maps, key)]
            prod = legs[0]
            for leg in legs[1:]:
                prod = ts_tensor(prod, leg)
            for j, term in enumerate(prod.coeffs):
                if term:
                    acc[i + j] = acc[i + j] + c * term
    return TSeries(acc)


class SeriesMismatch(NamedTuple):
    """First disagreement between two series"""
    order: int
    term: object
    lhs: Element
    rhs: Element


def first_mismatch(a: TSeries, b: TSeries) -> Optional[SeriesMismatch]:
    """Lowest t-order (and smallest basis key there) where a and b differ"""
    n = a._check(b)
    for k in range(n + 1):
        diff = a[k] - b[k]
        if diff:
            if isinstance(diff, (UElt, TensorElt)):
                term = min(diff.keys(), key=_key_order)
            else:
                term = None
            return SeriesMismatch(k, term, a[k], b[k])
    return None


def _key_order(key):
    if key and isinstance(key[0], PBWMono):
        return (sum(len(leg) for leg in key), key)
    return (len(key), key)
