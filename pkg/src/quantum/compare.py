"""
Equality checks that report where two sides first disagree
"""
from typing import Optional, Union

from src.algebra.series import TSeries, first_mismatch
from src.algebra.uea import Element
from src.models.results import Mismatch

Value = Union[TSeries, Element]


def _lift(x: Value, order: int) -> TSeries:
    if isinstance(x, TSeries):
        return x
    return TSeries.constant(x, order)


def render_value(x: Value) -> str:
    from src.cli.render import render_element
    if isinstance(x, TSeries):
        return x.render()
    return render_element(x)


def compare_values(lhs: Value, rhs: Value, oracle: Optional[Value] = None) -> Optional[Mismatch]:
    """
    None when lhs == rhs (modulo the smaller truncation order), otherwise
    the lowest differing t-order with the offending basis term.
    """
    orders = [x.order for x in (lhs, rhs) if isinstance(x, TSeries)]
    order = min(orders) if orders else 0
    a, b = _lift(lhs, order), _lift(rhs, order)
    if a.arity != b.arity:
        return Mismatch(order=0, term=None, lhs=f"arity {a.arity}", rhs=f"arity {b.arity}")
    found = first_mismatch(a, b)
    if found is None:
        return None
    from src.cli.render import render_element, render_key
    return Mismatch(
        order=found.order,
        term=None if found.term is None else render_key(found.term),
        lhs=render_element(found.lhs),
        rhs=render_element(found.rhs),
        oracle=None if oracle is None else render_value(oracle),
    )
