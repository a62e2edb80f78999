"""
Named parameter grids for the check suites
"""
from fractions import Fraction
from itertools import product
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config.settings import settings
from src.algebra.scalars import as_rational
from src.models.context import Case, TwistContext
from src.utils.errors import UsageError

Pair = Tuple[int, int]


class Grid(BaseModel):
    """Sample points over which every suite instantiates its identities"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(..., min_length=1)
    m_values: Tuple[Pair, ...] = Field(..., min_length=1, description="Degrees m of the generators y_m")
    n_values: Tuple[Pair, ...] = Field(..., min_length=1, description="Degrees n of E")
    c_values: Tuple[Fraction, ...] = Field(..., min_length=1, description="Shifts c of the twist families")
    a_values: Tuple[Fraction, ...] = Field(..., min_length=1, description="Offsets a, d in the factorial identities")
    max_power: int = Field(3, ge=0, description="Largest i, j in the commutation identities")
    max_factorial: int = Field(4, ge=0, description="Largest r, s, m in the factorial identities")
    order: int = Field(default_factory=lambda: settings.SUITE_ORDER, ge=0)
    lie_radius: int = Field(1, ge=0, description="Jacobi runs over degrees in [-radius, radius]^2")
    hopf_radius: int = Field(1, ge=0, description="Hopf axioms run over degrees in [-radius, radius]^2")
    pair_samples: int = Field(default_factory=lambda: settings.HOPF_PAIR_SAMPLES, ge=0)

    @field_validator("c_values", "a_values", mode="before")
    @classmethod
    def exact(cls, v):
        return tuple(as_rational(x) for x in v)

    @field_validator("n_values")
    @classmethod
    def nonzero_n(cls, v):
        if (0, 0) in v:
            raise ValueError("n = (0,0) gives no valid context for the g, e, h, f cases")
        return v

    @field_validator("order")
    @classmethod
    def order_within_limit(cls, v: int) -> int:
        if v > settings.MAX_ORDER:
            raise ValueError(f"order {v} exceeds the maximum {settings.MAX_ORDER}")
        return v

    def with_order(self, order: int) -> "Grid":
        return self.model_copy(update={"order": self.order_within_limit(order)})

    def contexts(self, cases=tuple(Case)) -> List[TwistContext]:
        """One context per (case, n), with the default x"""
        return [TwistContext(case=case, n=n, order=self.order)
                for case, n in product(cases, self.n_values)]

    def degrees_for(self, n: Pair) -> List[Pair]:
        """The m grid plus -n, which selects the m + n = 0 branches"""
        out = list(self.m_values)
        minus_n = (-n[0], -n[1])
        if minus_n not in out:
            out.append(minus_n)
        return out


def _square(radius: int) -> Tuple[Pair, ...]:
    return tuple((a, b) for a in range(-radius, radius + 1) for b in range(-radius, radius + 1))


GRIDS: Dict[str, Grid] = {
    "quick": Grid(
        name="quick",
        m_values=((0, 0), (1, 0), (0, 1), (1, 1), (-1, -1), (2, -1)),
        n_values=((1, 1), (0, 1)),
        c_values=(0, 1, Fraction(-1, 2)),
        a_values=(0, 1, Fraction(-1, 2), 2),
        max_power=3,
        max_factorial=3,
        lie_radius=1,
        hopf_radius=0,
        pair_samples=2,
    ),
    "default": Grid(
        name="default",
        m_values=_square(2),
        n_values=((1, 1), (0, 1), (2, -1)),
        c_values=(0, 1, Fraction(-1, 2)),
        a_values=(0, 1, -1, Fraction(1, 2), Fraction(-1, 2), 2),
        max_power=3,
        max_factorial=4,
        lie_radius=2,
        hopf_radius=1,
    ),
    "full": Grid(
        name="full",
        m_values=_square(3),
        n_values=((1, 1), (0, 1), (1, 0), (2, -1), (1, 2)),
        c_values=(0, 1, -1, Fraction(-1, 2), Fraction(1, 3)),
        a_values=(0, 1, -1, Fraction(1, 2), Fraction(-1, 2), 2),
        max_power=4,
        max_factorial=4,
        order=4,
        lie_radius=2,
        hopf_radius=1,
    ),
}


def get_grid(name: str, order: int = None) -> Grid:
    """
    Look up a named grid, optionally overriding its truncation order.

    Raises:
        UsageError: unknown grid name
    """
    try:
        grid = GRIDS[name]
    except KeyError:
        raise UsageError(f"unknown grid {name!r}; choose from {', '.join(GRIDS)}") from None
    if order is not None and order != grid.order:
        grid = grid.with_order(order)
    return grid
