"""
Twist contexts: the data selecting one of the six quantizations
"""
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import settings
from src.algebra.liealg import D, D1, D2, GenId, Kind, LieElt, bracket_lin
from src.algebra.scalars import as_rational
from src.algebra.uea import UElt


class Case(str, Enum):
    """
    The six (T, E) choices.

    g, e, h, f use T = x1 d1 + x2 d2 with E = g_n, e_n, h_n, f_n;
    d uses T = d/2 with E = e_n and df uses T = -d/2 with E = f_n.
    h, f and df are the images of g, e and d under the involution.
    """
    G = "g"
    E = "e"
    D = "d"
    H = "h"
    F = "f"
    DF = "df"

    @property
    def uses_x(self) -> bool:
        return self in (Case.G, Case.E, Case.H, Case.F)

    @property
    def is_mirror(self) -> bool:
        return self in (Case.H, Case.F, Case.DF)

    @property
    def mirror(self) -> "Case":
        return _MIRROR[self]

    @property
    def base(self) -> "Case":
        """The non-mirrored case this one is built from"""
        return self.mirror if self.is_mirror else self

    @property
    def e_kind(self) -> Kind:
        return _E_KIND[self]


_MIRROR = {Case.G: Case.H, Case.H: Case.G, Case.E: Case.F, Case.F: Case.E,
           Case.D: Case.DF, Case.DF: Case.D}
_E_KIND = {Case.G: Kind.G, Case.E: Kind.E, Case.D: Kind.E,
           Case.H: Kind.H, Case.F: Kind.F, Case.DF: Kind.F}


def _parse_pair(value: Any, convert) -> Tuple:
    if isinstance(value, str):
        parts = [p for p in value.replace("(", "").replace(")", "").split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected a pair 'a,b', got {value!r}")
        value = parts
    value = tuple(value)
    if len(value) != 2:
        raise ValueError(f"expected a pair, got {value!r}")
    return tuple(convert(v) for v in value)


def _to_int(v) -> int:
    if isinstance(v, str):
        return int(v.strip())
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise ValueError(f"{v} is not an integer")
        return int(v)
    return int(v)


def default_x(n: Tuple[int, int]) -> Tuple[Fraction, Fraction]:
    """
    A solution of x1 n1 + x2 n2 = 1 with the smallest common denominator,
    then the smallest |x1| + |x2|, preferring a positive x1.
    """
    n1, n2 = n
    if (n1, n2) == (0, 0):
        raise ValueError("n = (0,0) admits no x with x1 n1 + x2 n2 = 1")
    g = gcd(n1, n2)
    for d in range(1, g + 1):
        bound = d + abs(n1) + abs(n2)
        best = None
        for p1 in range(-bound, bound + 1):
            if n2 == 0:
                if p1 * n1 != d:
                    continue
                p2 = 0
            else:
                rest = d - p1 * n1
                if rest % n2:
                    continue
                p2 = rest // n2
            key = (abs(p1) + abs(p2), -p1, -p2)
            if best is None or key < best[0]:
                best = (key, (p1, p2))
        if best is not None:
            p1, p2 = best[1]
            return Fraction(p1, d), Fraction(p2, d)
    raise ValueError(f"no rational solution found for n = {n}")


class TwistContext(BaseModel):
    """A validated (case, n, x, order) selecting T, E and the truncation"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    case: Case = Field(..., description="Which (T, E) pair")
    n: Tuple[int, int] = Field(..., description="Degree of E")
    x: Optional[Tuple[Fraction, Fraction]] = Field(None, description="Coefficients of T = x1 d1 + x2 d2")
    order: int = Field(default_factory=lambda: settings.DEFAULT_ORDER, ge=0,
                       description="Truncation order N; series are exact mod t^(N+1)")

    @field_validator("n", mode="before")
    @classmethod
    def parse_n(cls, v: Any) -> Tuple[int, int]:
        return _parse_pair(v, _to_int)

    @field_validator("x", mode="before")
    @classmethod
    def parse_x(cls, v: Any) -> Optional[Tuple[Fraction, Fraction]]:
        if v is None:
            return None
        return _parse_pair(v, as_rational)

    @field_validator("order")
    @classmethod
    def order_within_limit(cls, v: int) -> int:
        if v > settings.MAX_ORDER:
            raise ValueError(f"order {v} exceeds the maximum {settings.MAX_ORDER}")
        return v

    @model_validator(mode="before")
    @classmethod
    def fill_default_x(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("x") is None and "n" in data:
            try:
                case = Case(data.get("case"))
            except ValueError:
                return data
            if case.uses_x:
                n = _parse_pair(data["n"], _to_int)
                if n != (0, 0):
                    data = {**data, "x": default_x(n)}
        return data

    @model_validator(mode="after")
    def check_pair(self) -> "TwistContext":
        if self.case.uses_x:
            if self.n == (0, 0):
                raise ValueError(f"case {self.case.value} needs n != (0,0): E = {self.case.e_kind.symbol}_n must exist")
            if self.x is None:
                raise ValueError("x is required when T = x1 d1 + x2 d2")
            if self.x[0] * self.n[0] + self.x[1] * self.n[1] != 1:
                raise ValueError(
                    f"x1 n1 + x2 n2 must equal 1, got "
                    f"{self.x[0]}*{self.n[0]} + {self.x[1]}*{self.n[1]}"
                )
        elif self.x is not None:
            raise ValueError(f"case {self.case.value} fixes T = {'-' if self.case is Case.DF else ''}d/2; x is not accepted")
        if bracket_lin(self.T_lie, LieElt.of(self.E)) != LieElt.of(self.E):
            raise ValueError("[T, E] = E does not hold for this choice")
        return self

    # -- derived data ---------------------------------------------------

    @property
    def E(self) -> GenId:
        return GenId(self.case.e_kind, *self.n)

    @property
    def E_elt(self) -> UElt:
        return UElt.gen(self.E)

    @property
    def T_lie(self) -> LieElt:
        return _cartan(self.case, self.x)

    @property
    def T(self) -> UElt:
        return UElt.from_lie(self.T_lie)

    # -- helpers --------------------------------------------------------

    def with_order(self, order: int) -> "TwistContext":
        return TwistContext(case=self.case, n=self.n, x=self.x, order=order)

    def mirrored(self) -> "TwistContext":
        """Context for the involution image: g<->h, e<->f, d<->df"""
        return TwistContext(case=self.case.mirror, n=self.n, x=self.x, order=self.order)

    def describe(self) -> str:
        text = f"case={self.case.value} n={self.n[0]},{self.n[1]}"
        if self.x is not None:
            text += f" x={self.x[0]},{self.x[1]}"
        return text + f" order={self.order}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case.value,
            "n": list(self.n),
            "x": None if self.x is None else [str(v) for v in self.x],
            "order": self.order,
        }

    @classmethod
    def parse(cls, spec: str) -> "TwistContext":
        """
        Build a context from ``case=g n=1,1 x=1,0 order=4``.

        Raises:
            ValueError: unknown or repeated keys
            pydantic.ValidationError: invalid parameter combinations
        """
        fields: Dict[str, str] = {}
        for token in spec.split():
            key, sep, value = token.partition("=")
            if not sep or key not in ("case", "n", "x", "order"):
                raise ValueError(f"unrecognized context field {token!r}")
            if key in fields:
                raise ValueError(f"context field {key!r} given twice")
            fields[key] = value
        if "case" not in fields or "n" not in fields:
            raise ValueError("context needs at least case= and n=")
        if "order" in fields:
            fields["order"] = int(fields["order"])
        return cls(**fields)


@lru_cache(maxsize=None)
def _cartan(case: Case, x: Optional[Tuple[Fraction, Fraction]]) -> LieElt:
    if case is Case.D:
        return LieElt({D: Fraction(1, 2)})
    if case is Case.DF:
        return LieElt({D: Fraction(-1, 2)})
    return LieElt({D1: x[0], D2: x[1]})
