"""
The Lie algebra W = sl2-hat(C_q) + C d1 + C d2 given by structure constants.

Basis: e_m, f_m (m in Z^2), g_k, h_k (k in Z^2 minus the origin), d, and the
degree derivations d1, d2.  g_0 and h_0 are not generators; any bracket that
would produce one contributes zero.
"""
import logging
from enum import IntEnum
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

from src.algebra.linear import LinearCombination, accumulate
from src.algebra.scalars import LaurentQ, ONE, ZERO, qpow

logger = logging.getLogger(__name__)

Degree = Tuple[int, int]


class Kind(IntEnum):
    """Generator families, in PBW order"""
    D1 = 0
    D2 = 1
    D = 2
    E = 3
    F = 4
    G = 5
    H = 6

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def is_graded(self) -> bool:
        """True for the families carrying a Z^2 index"""
        return self >= Kind.E

    @classmethod
    def from_symbol(cls, symbol: str) -> "Kind":
        try:
            return _BY_SYMBOL[symbol.lower()]
        except KeyError:
            raise ValueError(f"unknown generator family {symbol!r}") from None


_SYMBOLS = {Kind.D1: "d1", Kind.D2: "d2", Kind.D: "d", Kind.E: "e",
            Kind.F: "f", Kind.G: "g", Kind.H: "h"}
_BY_SYMBOL = {v: k for k, v in _SYMBOLS.items()}


class GenId(tuple):
    """
    A basis generator (kind, m1, m2).

    Ordering is plain tuple ordering, which is the PBW order:
    d1 < d2 < d < e < f < g < h, ties broken by (m1, m2).
    """

    __slots__ = ()

    def __new__(cls, kind, m1: int = 0, m2: int = 0):
        kind = Kind.from_symbol(kind) if isinstance(kind, str) else Kind(kind)
        m1, m2 = int(m1), int(m2)
        if not kind.is_graded and (m1, m2) != (0, 0):
            raise ValueError(f"{kind.symbol} has no degree index")
        if kind in (Kind.G, Kind.H) and (m1, m2) == (0, 0):
            raise ValueError(f"{kind.symbol}[0,0] is not a generator (it is zero)")
        return tuple.__new__(cls, (kind, m1, m2))

    @property
    def kind(self) -> Kind:
        return self[0]

    @property
    def degree(self) -> Degree:
        return (self[1], self[2])

    def __str__(self) -> str:
        kind = self[0]
        if kind.is_graded:
            return f"{kind.symbol}[{self[1]},{self[2]}]"
        return kind.symbol

    def __repr__(self) -> str:
        return f"GenId({self})"

    def __getnewargs__(self):
        return tuple(self)


def gen(kind, m: Degree = (0, 0)) -> Optional[GenId]:
    """Generator of the given family and degree, or None for g_0 / h_0"""
    kind = Kind.from_symbol(kind) if isinstance(kind, str) else Kind(kind)
    if kind in (Kind.G, Kind.H) and tuple(m) == (0, 0):
        return None
    return GenId(kind, *m)


def add_degrees(a: Degree, b: Degree) -> Degree:
    return (a[0] + b[0], a[1] + b[1])


D1 = GenId(Kind.D1)
D2 = GenId(Kind.D2)
D = GenId(Kind.D)


class LieElt(LinearCombination):
    """Finite linear combination of generators"""

    __slots__ = ()

    def _check_key(self, key):
        if not isinstance(key, GenId):
            raise TypeError(f"{key!r} is not a generator")
        return key

    @classmethod
    def of(cls, g: Optional[GenId], coeff=ONE) -> "LieElt":
        if g is None:
            return cls._wrap({})
        return cls({g: coeff})

    def degrees(self):
        return {g.degree for g in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __mul__(self, scalar):
        try:
            return self.scale(scalar)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def render(self) -> str:
        from src.cli.render import render_lie
        return render_lie(self)

    __str__ = render

    def __repr__(self) -> str:
        return f"LieElt({self.render()!r})"


ZERO_LIE = LieElt._wrap({})

# q-exponents of the structure constants, keyed by bracket.  Tests mutate
# entries (and call clear_caches) to confirm the checks are not vacuous.
STRUCTURE_EXPONENTS: Dict[str, Callable[[Degree, Degree], int]] = {
    "g,e": lambda k, m: k[1] * m[0],    # [g_k, e_m] =  q^(k2 m1) e_{k+m}
    "h,e": lambda k, m: k[0] * m[1],    # [h_k, e_m] = -q^(k1 m2) e_{k+m}
    "h,f": lambda k, m: k[1] * m[0],    # [h_k, f_m] =  q^(k2 m1) f_{k+m}
    "g,f": lambda k, m: k[0] * m[1],    # [g_k, f_m] = -q^(k1 m2) f_{k+m}
    "e,f:g": lambda m, p: m[1] * p[0],  # g and d parts of [e_m, f_p]
    "e,f:h": lambda m, p: p[1] * m[0],  # h part of [e_m, f_p]
    "g,g": lambda k, p: k[1] * p[0],    # [g_k, g_p] = (q^(k2 p1) - q^(p2 k1)) g_{k+p}
    "h,h": lambda k, p: k[1] * p[0],
}


def _exp(name: str, a: Degree, b: Degree) -> int:
    return STRUCTURE_EXPONENTS[name](a, b)


def _ordered_bracket(a: GenId, b: GenId) -> Dict[GenId, LaurentQ]:
    """[a, b] for a < b in the generator order"""
    ka, kb = a.kind, b.kind
    ma, mb = a.degree, b.degree
    total = add_degrees(ma, mb)

    if ka is Kind.D1 or ka is Kind.D2:
        weight = mb[0] if ka is Kind.D1 else mb[1]
        return {b: LaurentQ.const(weight)} if weight else {}

    if ka is Kind.D:
        if kb is Kind.E:
            return {b: LaurentQ.const(2)}
        if kb is Kind.F:
            return {b: LaurentQ.const(-2)}
        return {}

    if ka is Kind.E:
        if kb is Kind.F:
            if total == (0, 0):
                return {D: qpow(_exp("e,f:g", ma, mb))}
            return {GenId(Kind.G, *total): qpow(_exp("e,f:g", ma, mb)),
                    GenId(Kind.H, *total): -qpow(_exp("e,f:h", ma, mb))}
        if kb is Kind.G:
            return {GenId(Kind.E, *total): -qpow(_exp("g,e", mb, ma))}
        if kb is Kind.H:
            return {GenId(Kind.E, *total): qpow(_exp("h,e", mb, ma))}
        return {}

    if ka is Kind.F:
        if kb is Kind.G:
            return {GenId(Kind.F, *total): qpow(_exp("g,f", mb, ma))}
        if kb is Kind.H:
            return {GenId(Kind.F, *total): -qpow(_exp("h,f", mb, ma))}
        return {}

    if ka is kb and ka in (Kind.G, Kind.H):
        if total == (0, 0):
            return {}
        name = "g,g" if ka is Kind.G else "h,h"
        coeff = qpow(_exp(name, ma, mb)) - qpow(_exp(name, mb, ma))
        return {GenId(ka, *total): coeff} if coeff else {}

    return {}


@lru_cache(maxsize=None)
def bracket(a: GenId, b: GenId) -> LieElt:
    """
    Lie bracket of two generators.

    Table-driven and total; results are cached per pair.
    """
    if a == b:
        return ZERO_LIE
    if a > b:
        return -bracket(b, a)
    return LieElt._wrap(_ordered_bracket(a, b))


def bracket_lin(x: LieElt, y: LieElt) -> LieElt:
    """Bilinear extension of bracket"""
    out: Dict[GenId, LaurentQ] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            coeff = ca * cb
            for g, c in bracket(a, b).items():
                accumulate(out, g, coeff * c)
    return LieElt._wrap(out)


_TAU_KIND = {Kind.E: Kind.F, Kind.F: Kind.E, Kind.G: Kind.H, Kind.H: Kind.G,
             Kind.D: Kind.D, Kind.D1: Kind.D1, Kind.D2: Kind.D2}


def tau_gen(g: GenId) -> Tuple[GenId, int]:
    """Image of a generator under the involution, as (generator, sign)"""
    sign = -1 if g.kind is Kind.D else 1
    return GenId(_TAU_KIND[g.kind], *g.degree), sign


def tau(x: LieElt) -> LieElt:
    """The involution e <-> f, g <-> h, d -> -d fixing d1, d2"""
    out: Dict[GenId, LaurentQ] = {}
    for g, c in x.items():
        image, sign = tau_gen(g)
        accumulate(out, image, c if sign > 0 else -c)
    return LieElt._wrap(out)


def generators_in_window(radius: int, kinds=tuple(Kind)):
    """All generators of the given kinds with degree in [-radius, radius]^2"""
    out = []
    for kind in sorted(kinds):
        if not kind.is_graded:
            out.append(GenId(kind))
            continue
        for m1 in range(-radius, radius + 1):
            for m2 in range(-radius, radius + 1):
                g = gen(kind, (m1, m2))
                if g is not None:
                    out.append(g)
    return out


def clear_caches() -> None:
    """Drop memoized brackets (and everything built on them)"""
    bracket.cache_clear()
    from src.algebra import uea
    uea.clear_caches()
    logger.debug("Lie and enveloping-algebra caches cleared")
