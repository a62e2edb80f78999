"""
Tests for the expression language and the canonical renderings
"""
import json

import pytest
from hypothesis import given, settings

from src.algebra.liealg import D, GenId, Kind
from src.algebra.scalars import Q
from src.algebra.series import TSeries
from src.algebra.uea import TensorElt, UElt, outer
from src.cli import canonical, element_to_json, parse_element, parse_expr, parse_generator, render_element
from src.cli.expression import BinOp, Gen, Pow
from src.utils.errors import ParseError, UsageError
from tests.strategies import u_elements


def test_product_of_generators():
    node = parse_expr("e[1,2]*f[-1,-2]")
    assert isinstance(node, BinOp) and node.op == "*"
    assert node.left == Gen(Kind.E, (1, 2), 0)
    assert node.right.kind is Kind.F and node.right.degree == (-1, -2)


def test_scalar_times_generator():
    assert parse_element("(1 - q)*g[1,1]") == UElt.gen(GenId(Kind.G, 1, 1)).scale(1 - Q)


def test_powers():
    assert isinstance(parse_expr("q^-2"), Pow)
    assert parse_element("d^2") == UElt.gen(D) * UElt.gen(D)
    with pytest.raises(UsageError):
        parse_element("d^-1")


def test_truncated_input_reports_offset():
    with pytest.raises(ParseError) as info:
        parse_expr("e[1,")
    assert info.value.offset == 4
    assert "integer" in info.value.expected
    assert "^" in info.value.diagnostic()


@pytest.mark.parametrize("text, offset", [
    ("e[1 2]", 4),
    ("x + d", 0),
    ("d +", 3),
    ("1/0", 2),
    ("d $ d", 2),
    ("", 0),
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.offset == offset


def test_g0_evaluates_to_zero():
    assert parse_element("g[0,0] + h[0,0]") == UElt.zero()


def test_canonical_ordering():
    assert canonical("f[1,0]*e[0,0]") == "-g[1,0] + h[1,0] + e[0,0]*f[1,0]"
    assert canonical("e[1,2]*f[-1,-2] - f[-1,-2]*e[1,2]") == "q^-2*d"
    assert canonical("d^2 + 2*d1") == "2*d1 + d*d"
    assert canonical("0*d") == "0"


def test_parse_generator():
    assert parse_generator("h[2,-1]") == GenId(Kind.H, 2, -1)
    assert parse_generator("d1") == GenId(Kind.D1)
    with pytest.raises(UsageError):
        parse_generator("2*d")
    with pytest.raises(UsageError):
        parse_generator("d*e[0,0]")


@given(u_elements(max_terms=3))
@settings(max_examples=50, deadline=None)
def test_render_parses_back(x):
    text = x.render()
    assert parse_element(text) == x
    assert canonical(text) == text


def test_tensor_and_series_rendering():
    e = UElt.gen(GenId(Kind.E, 0, 1))
    one = UElt.one()
    s = TSeries([outer(e, one) + outer(one, e), -outer(e, e), TensorElt.zero(2)])
    assert render_element(s) == "e[0,1]⊗1 + 1⊗e[0,1] - (e[0,1]⊗e[0,1]) t + O(t^3)"


def test_json_shape():
    e = UElt.gen(GenId(Kind.E, 0, 1))
    data = element_to_json(TSeries([outer(e, UElt.one()), outer(e, e).scale(Q)]))
    assert data["type"] == "series"
    assert data["order"] == 1
    assert data["coeffs"][1]["terms"] == [{"coeff": "q", "tensor": [["e[0,1]"], ["e[0,1]"]]}]
    json.dumps(data)
    assert element_to_json(UElt.gen(D))["terms"] == [{"coeff": "1", "mono": ["d"]}]
