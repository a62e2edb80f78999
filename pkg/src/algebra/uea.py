"""
The universal enveloping algebra U(W) in PBW normal form.

Elements are sparse combinations of sorted generator words.  Products are
normalized by inserting generators one at a time into sorted words and
rewriting each out-of-order adjacent pair ab -> ba + [a, b].  The
undeformed Hopf structure (primitive coproduct, S0(x) = -x, counit) and
the tensor powers U^(x)k live here as well.
"""
import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.algebra.linear import LinearCombination, accumulate
from src.algebra.liealg import GenId, LieElt, bracket, tau_gen
from src.algebra.scalars import LaurentQ, ONE, ZERO, as_rational, coerce_scalar
from src.utils.errors import UsageError

logger = logging.getLogger(__name__)


class PBWMono(tuple):
    """A non-decreasing word of generators; the empty word is the unit"""

    __slots__ = ()

    def __new__(cls, factors: Iterable[GenId] = ()):
        factors = tuple(factors)
        for g in factors:
            if not isinstance(g, GenId):
                raise TypeError(f"{g!r} is not a generator")
        for a, b in zip(factors, factors[1:]):
            if b < a:
                raise ValueError(f"factors out of PBW order: {a} before {b}")
        return tuple.__new__(cls, factors)

    def __str__(self) -> str:
        return "*".join(str(g) for g in self) if self else "1"

    def __repr__(self) -> str:
        return f"PBWMono({self})"

    def __getnewargs__(self):
        return (tuple(self),)


def _mono(factors) -> PBWMono:
    """Wrap a word already known to be sorted"""
    return tuple.__new__(PBWMono, factors)


EMPTY = _mono(())

Term = Tuple[Tuple[PBWMono, LaurentQ], ...]


@lru_cache(maxsize=None)
def _insert(mono: PBWMono, g: GenId) -> Term:
    """Normal form of mono * g"""
    if not mono or mono[-1] <= g:
        return ((_mono(mono + (g,)), ONE),)
    head, last = _mono(mono[:-1]), mono[-1]
    out: Dict[PBWMono, LaurentQ] = {}
    # head*last*g = (head*g)*last + head*[last, g]
    for m, c in _insert(head, g):
        for m2, c2 in _insert(m, last):
            accumulate(out, m2, c * c2)
    for h, c in bracket(last, g).items():
        for m2, c2 in _insert(head, h):
            accumulate(out, m2, c * c2)
    return tuple(out.items())


@lru_cache(maxsize=None)
def mono_mul(a: PBWMono, b: Tuple[GenId, ...]) -> Term:
    """Normal form of the word a followed by the word b"""
    if not b:
        return ((a, ONE),)
    if not a or a[-1] <= b[0]:
        word = a + tuple(b)
        if all(x <= y for x, y in zip(word, word[1:])):
            return ((_mono(word), ONE),)
    current: Dict[PBWMono, LaurentQ] = {a: ONE}
    for g in b:
        following: Dict[PBWMono, LaurentQ] = {}
        for m, c in current.items():
            for m2, c2 in _insert(m, g):
                accumulate(following, m2, c * c2)
        current = following
    return tuple(current.items())


class UElt(LinearCombination):
    """Element of U(W): PBW monomials with LaurentQ coefficients"""

    __slots__ = ()

    def _check_key(self, key):
        if not isinstance(key, PBWMono):
            key = PBWMono(key)
        return key

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "UElt":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "UElt":
        return cls._wrap({EMPTY: ONE})

    @classmethod
    def scalar(cls, value) -> "UElt":
        value = coerce_scalar(value)
        if value is NotImplemented:
            raise TypeError("not a scalar")
        return cls._wrap({EMPTY: value} if value else {})

    @classmethod
    def gen(cls, g: Optional[GenId], coeff=ONE) -> "UElt":
        """The generator g as an element; None (g_0, h_0) gives zero"""
        if g is None:
            return cls._wrap({})
        return cls({_mono((g,)): coeff})

    @classmethod
    def mono(cls, m: PBWMono, coeff=ONE) -> "UElt":
        if isinstance(m, PBWMono) and coeff is ONE:
            return cls._wrap({m: ONE})
        return cls({m: coeff})

    @classmethod
    def from_lie(cls, x: LieElt) -> "UElt":
        return cls._wrap({_mono((g,)): c for g, c in x.items()})

    # -- inspection -----------------------------------------------------

    def is_scalar(self) -> bool:
        return all(not m for m in self._terms)

    def scalar_part(self) -> LaurentQ:
        return self._terms.get(EMPTY, ZERO)

    def to_lie(self) -> LieElt:
        """Reinterpret a combination of single generators as a Lie element"""
        out = {}
        for m, c in self._terms.items():
            if len(m) != 1:
                raise UsageError(f"{m} is not a single generator")
            out[m[0]] = c
        return LieElt._wrap(out)

    def max_length(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UElt):
            lifted = coerce_scalar(other)
            if lifted is NotImplemented:
                return NotImplemented
            other = UElt.scalar(lifted)
        return LinearCombination.__add__(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UElt):
            lifted = coerce_scalar(other)
            if lifted is NotImplemented:
                return NotImplemented
            other = UElt.scalar(lifted)
        return LinearCombination.__add__(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UElt):
            return u_mul(self, other)
        scalar = coerce_scalar(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other):
        scalar = coerce_scalar(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __pow__(self, exponent: int) -> "UElt":
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError("only nonnegative integer powers of U-elements are defined")
        result = UElt.one()
        for _ in range(exponent):
            result = result * self
        return result

    def render(self) -> str:
        from src.cli.render import render_u
        return render_u(self)

    __str__ = render

    def __repr__(self) -> str:
        return f"UElt({self.render()!r})"


def straighten(word: Sequence[GenId], coeff=ONE) -> UElt:
    """PBW normal form of coeff * (product of the word)"""
    coeff = coerce_scalar(coeff)
    out: Dict[PBWMono, LaurentQ] = {}
    for m, c in mono_mul(EMPTY, tuple(word)):
        accumulate(out, m, c * coeff)
    return UElt._wrap(out)


def u_mul(a: UElt, b: UElt) -> UElt:
    """Product in normal form"""
    out: Dict[PBWMono, LaurentQ] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            c = ca * cb
            for m, cm in mono_mul(ma, mb):
                accumulate(out, m, c * cm)
    return UElt._wrap(out)


# -- tensor powers ------------------------------------------------------

class TensorElt(LinearCombination):
    """Element of U^(x)k: combinations of k-tuples of PBW monomials"""

    __slots__ = ("arity",)

    def __init__(self, terms=None, arity: int = 2):
        self.arity = arity
        super().__init__(terms)

    def _check_key(self, key):
        key = tuple(k if isinstance(k, PBWMono) else PBWMono(k) for k in key)
        if len(key) != self.arity:
            raise ValueError(f"expected {self.arity} tensor legs, got {len(key)}")
        return key

    def _like(self, clean):
        return TensorElt._wrap_arity(clean, self.arity)

    @classmethod
    def _wrap_arity(cls, clean, arity: int) -> "TensorElt":
        obj = object.__new__(cls)
        obj._terms = clean
        obj._hash = None
        obj.arity = arity
        return obj

    def _compatible(self, other) -> bool:
        if not isinstance(other, TensorElt):
            return False
        if other.arity != self.arity:
            raise UsageError(f"tensor arity mismatch: {self.arity} vs {other.arity}")
        return True

    @classmethod
    def zero(cls, arity: int = 2) -> "TensorElt":
        return cls._wrap_arity({}, arity)

    @classmethod
    def one(cls, arity: int = 2) -> "TensorElt":
        return cls._wrap_arity({(EMPTY,) * arity: ONE}, arity)

    @classmethod
    def pure(cls, *legs: UElt) -> "TensorElt":
        """legs[0] (x) legs[1] (x) ..."""
        result = outer(*legs)
        if not isinstance(result, TensorElt):
            raise UsageError("a pure tensor needs at least two legs")
        return result

    def is_scalar(self) -> bool:
        return all(not any(key) for key in self._terms)

    def scalar_part(self) -> LaurentQ:
        return self._terms.get((EMPTY,) * self.arity, ZERO)

    def __mul__(self, other):
        if isinstance(other, TensorElt):
            return tensor_mul(self, other)
        scalar = coerce_scalar(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other):
        scalar = coerce_scalar(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def render(self) -> str:
        from src.cli.render import render_tensor
        return render_tensor(self)

    __str__ = render

    def __repr__(self) -> str:
        return f"TensorElt({self.render()!r})"


Element = Union[UElt, TensorElt, LaurentQ]


def element_arity(x) -> int:
    """Number of tensor legs: 0 for scalars, 1 for UElt"""
    if isinstance(x, TensorElt):
        return x.arity
    if isinstance(x, UElt):
        return 1
    if coerce_scalar(x) is not NotImplemented:
        return 0
    raise TypeError(f"{x!r} is not an algebra element")


def _leg_terms(x) -> List[Tuple[tuple, LaurentQ]]:
    if isinstance(x, TensorElt):
        return list(x.items())
    if isinstance(x, UElt):
        return [((m,), c) for m, c in x.items()]
    c = coerce_scalar(x)
    return [((), c)] if c else []


def _from_terms(terms: Dict[tuple, LaurentQ], arity: int) -> Element:
    if arity == 0:
        return terms.get((), ZERO)
    if arity == 1:
        return UElt._wrap({key[0]: c for key, c in terms.items()})
    return TensorElt._wrap_arity(terms, arity)


def outer(*factors) -> Element:
    """Tensor product of elements; arities add (scalars have arity 0)"""
    acc: Dict[tuple, LaurentQ] = {(): ONE}
    arity = 0
    for factor in factors:
        terms = _leg_terms(factor)
        arity += element_arity(factor)
        following: Dict[tuple, LaurentQ] = {}
        for k1, c1 in acc.items():
            for k2, c2 in terms:
                accumulate(following, k1 + k2, c1 * c2)
        acc = following
    return _from_terms(acc, arity)


def tensor_mul(a: TensorElt, b: TensorElt) -> TensorElt:
    """Componentwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2"""
    if a.arity != b.arity:
        raise UsageError(f"cannot multiply tensors of arity {a.arity} and {b.arity}")
    out: Dict[tuple, LaurentQ] = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            c = ca * cb
            legs = [mono_mul(x, y) for x, y in zip(ka, kb)]
            for combo in itertools.product(*legs):
                coeff = c
                for _, cc in combo:
                    coeff = coeff * cc
                accumulate(out, tuple(m for m, _ in combo), coeff)
    return TensorElt._wrap_arity(out, a.arity)


LegMap = Callable[[UElt], Element]


def identity(x: UElt) -> UElt:
    return x


def tensor_apply(maps: Sequence[LegMap], x: TensorElt) -> Element:
    """
    Apply one linear map per leg, e.g. (Delta0 (x) Id) or (eps0 (x) Id).

    Each map receives a single monomial as a UElt.  The result's arity is
    the sum of the image arities, so (eps0 (x) Id) lands back in U.
    """
    if len(maps) != x.arity:
        raise UsageError(f"{len(maps)} maps for a tensor of arity {x.arity}")
    total = None
    for key, coeff in x.items():
        term = outer(*[fn(UElt.mono(m)) for fn, m in zip(maps, key)])
        term = coeff * term
        total = term if total is None else total + term
    if total is None:
        total = 0 * outer(*[fn(UElt.one()) for fn in maps])
    return total


def mu(x: TensorElt) -> UElt:
    """Multiplication U (x) U -> U"""
    if x.arity != 2:
        raise UsageError("multiplication needs a tensor of arity 2")
    out: Dict[PBWMono, LaurentQ] = {}
    for (a, b), c in x.items():
        for m, cm in mono_mul(a, b):
            accumulate(out, m, c * cm)
    return UElt._wrap(out)


def flip(x: TensorElt) -> TensorElt:
    """The flip a (x) b -> b (x) a"""
    if x.arity != 2:
        raise UsageError("flip needs a tensor of arity 2")
    return TensorElt._wrap_arity({(b, a): c for (a, b), c in x.items()}, 2)


# -- undeformed Hopf structure -----------------------------------------

@lru_cache(maxsize=None)
def _delta0_mono(m: PBWMono) -> Tuple[Tuple[tuple, LaurentQ], ...]:
    out: Dict[tuple, LaurentQ] = {}
    k = len(m)
    for mask in range(1 << k):
        left = _mono(tuple(m[i] for i in range(k) if not (mask >> i) & 1))
        right = _mono(tuple(m[i] for i in range(k) if (mask >> i) & 1))
        accumulate(out, (left, right), ONE)
    return tuple(out.items())


def delta0(x: UElt) -> TensorElt:
    """Primitive coproduct extended multiplicatively"""
    out: Dict[tuple, LaurentQ] = {}
    for m, c in x.items():
        for key, ck in _delta0_mono(m):
            accumulate(out, key, c * ck)
    return TensorElt._wrap_arity(out, 2)


@lru_cache(maxsize=None)
def _antipode0_mono(m: PBWMono) -> UElt:
    sign = -1 if len(m) % 2 else 1
    return straighten(tuple(reversed(m)), LaurentQ.const(sign))


def antipode0(x: UElt) -> UElt:
    """S0(g1...gk) = (-1)^k gk...g1"""
    total = UElt.zero()
    for m, c in x.items():
        total = total + _antipode0_mono(m).scale(c)
    return total


def counit0(x: UElt) -> LaurentQ:
    """Coefficient of the unit monomial"""
    return x.scalar_part()


@lru_cache(maxsize=None)
def _tau_mono(m: PBWMono) -> UElt:
    sign = 1
    word = []
    for g in m:
        image, s = tau_gen(g)
        sign *= s
        word.append(image)
    return straighten(word, LaurentQ.const(sign))


def tau_u(x: UElt) -> UElt:
    """The involution extended to an algebra automorphism of U"""
    total = UElt.zero()
    for m, c in x.items():
        total = total + _tau_mono(m).scale(c)
    return total


# -- factorial elements -------------------------------------------------

def _check_length(r: int) -> None:
    if r < 0:
        raise UsageError(f"factorial length must be nonnegative, got {r}")


def rising(base: UElt, a, r: int) -> UElt:
    """(base+a)(base+a+1)...(base+a+r-1); 1 when r == 0"""
    _check_length(r)
    a = as_rational(a)
    result = UElt.one()
    for j in range(r):
        result = result * (base + (a + j))
    return result


def falling(base: UElt, a, r: int) -> UElt:
    """(base+a)(base+a-1)...(base+a-r+1); 1 when r == 0"""
    _check_length(r)
    a = as_rational(a)
    result = UElt.one()
    for j in range(r):
        result = result * (base + (a - j))
    return result


def clear_caches() -> None:
    for cached in (_insert, mono_mul, _delta0_mono, _antipode0_mono, _tau_mono):
        cached.cache_clear()
    from src.quantum import twist
    twist.clear_caches()


def cache_info() -> Dict[str, object]:
    return {"insert": _insert.cache_info(), "mono_mul": mono_mul.cache_info()}
