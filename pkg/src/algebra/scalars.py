"""
Exact scalars: rationals and the Laurent-polynomial ring Q[q, q^-1]
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce a value to an exact Fraction.

    Floats are rejected; every quantity in this package is exact.

    Raises:
        TypeError: for floats and unsupported types
        ValueError: for malformed strings
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class LaurentQ:
    """
    A Laurent polynomial sum(a_k q^k) with rational coefficients.

    Instances are immutable; zero coefficients are never stored, so two
    polynomials are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, RationalLike]] = None):
        clean: Dict[int, Fraction] = {}
        if terms:
            for exponent, coeff in terms.items():
                value = as_rational(coeff)
                if value:
                    clean[int(exponent)] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, clean: Dict[int, Fraction]) -> "LaurentQ":
        obj = object.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: RationalLike) -> "LaurentQ":
        value = as_rational(value)
        return cls._wrap({0: value} if value else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: RationalLike = 1) -> "LaurentQ":
        coeff = as_rational(coeff)
        return cls._wrap({int(exponent): coeff} if coeff else {})

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "LaurentQ":
        other = coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentQ._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentQ":
        other = coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQ":
        other = coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentQ":
        other = coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentQ":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "LaurentQ":
        """Inverse in Q[q, q^-1]; only nonzero monomials are units"""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of Q[q, q^-1]")
        (k, c), = self._terms.items()
        return LaurentQ._wrap({-k: 1 / c})

    # -- comparison -----------------------------------------------------

    def __eq__(self, other) -> bool:
        other = coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- conversion -----------------------------------------------------

    def evaluate(self, q: RationalLike) -> Fraction:
        """Exact value at a nonzero rational q"""
        q = as_rational(q)
        if not q and any(k < 0 for k in self._terms):
            raise ZeroDivisionError("negative powers of q at q = 0")
        return sum((c * q ** k for k, c in self._terms.items()), Fraction(0))

    def to_sympy(self, symbol=None):
        import sympy

        q = symbol if symbol is not None else sympy.Symbol("q")
        return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * q ** k
                           for k, c in self._terms.items()])

    def render(self) -> str:
        """Canonical text: ascending exponents, e.g. ``-1 + q^2``"""
        if not self._terms:
            return "0"
        parts = [_render_term(k, c) for k, c in sorted(self._terms.items())]
        text = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                text += " - " + part[1:]
            else:
                text += " + " + part
        return text

    __str__ = render

    def __repr__(self) -> str:
        return f"LaurentQ({self.render()!r})"


def _render_term(exponent: int, coeff: Fraction) -> str:
    if exponent == 0:
        return str(coeff)
    power = "q" if exponent == 1 else f"q^{exponent}"
    if coeff == 1:
        return power
    if coeff == -1:
        return "-" + power
    return f"{coeff}*{power}"


def coerce_scalar(value) -> "LaurentQ":
    """Lift ints, Fractions and numeric strings into LaurentQ"""
    if isinstance(value, LaurentQ):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return LaurentQ.const(value)
    return NotImplemented


def laurent_mul(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """Exact product in canonical sparse form"""
    if not a._terms or not b._terms:
        return ZERO
    out: Dict[int, Fraction] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            k = ka + kb
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return LaurentQ._wrap(out)


def qpow(exponent: int) -> LaurentQ:
    """q**exponent"""
    return LaurentQ._wrap({int(exponent): Fraction(1)})


@lru_cache(maxsize=4096)
def gen_binomial(r: Fraction, k: int) -> Fraction:
    """
    Generalized binomial coefficient r(r-1)...(r-k+1)/k!.

    Args:
        r: any rational upper argument
        k: nonnegative lower argument

    Returns:
        The coefficient; 1 when k == 0 and 0 for integers 0 <= r < k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = as_rational(r)
    value = Fraction(1)
    for j in range(k):
        value = value * (r - j) / (j + 1)
    return value


@lru_cache(maxsize=None)
def factorial(k: int) -> Fraction:
    value = Fraction(1)
    for j in range(2, k + 1):
        value *= j
    return value


ZERO = LaurentQ._wrap({})
ONE = LaurentQ._wrap({0: Fraction(1)})
Q = qpow(1)
