"""
Canonical text and JSON renderings.

Text forms are the ones the expression parser reads back: UElt terms are
ordered by (degree, PBW word), unit coefficients are omitted, and the
factors of a word are joined by ``*`` (powers are accepted on input only).
Tensors use the ⊗ sign and series list their nonzero t-coefficients in
ascending order.
"""
from typing import Any, Dict, List

from src.algebra.liealg import LieElt
from src.algebra.scalars import LaurentQ, coerce_scalar
from src.algebra.series import TSeries
from src.algebra.uea import PBWMono, TensorElt, UElt

TENSOR_SIGN = "⊗"


def render_mono(mono: PBWMono) -> str:
    """``e[1,0]*e[1,0]*f[0,1]``; the empty word is ``1``"""
    if not mono:
        return "1"
    return "*".join(str(g) for g in mono)


def _scaled(coeff: LaurentQ, body: str, wrap: bool) -> str:
    """coeff times an already-rendered basis element"""
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    if wrap:
        body = f"({body})"
    if coeff.is_monomial():
        return f"{coeff.render()}*{body}"
    return f"({coeff.render()})*{body}"


def _join(parts: List[str]) -> str:
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            text += " - " + part[1:]
        else:
            text += " + " + part
    return text


def _u_sort_key(mono: PBWMono):
    return (len(mono), mono)


def render_u(x: UElt) -> str:
    parts = []
    for mono in sorted(x.keys(), key=_u_sort_key):
        coeff = x.coefficient(mono)
        if not mono:
            parts.append(coeff.render())
        else:
            parts.append(_scaled(coeff, render_mono(mono), wrap=False))
    return _join(parts)


def render_lie(x: LieElt) -> str:
    return render_u(UElt.from_lie(x))


def _tensor_sort_key(key):
    return (sum(len(leg) for leg in key), tuple((-len(leg), leg) for leg in key))


def render_key(key) -> str:
    """A basis key: a PBW word, or a tuple of words for tensors"""
    if isinstance(key, PBWMono):
        return render_mono(key)
    return TENSOR_SIGN.join(render_mono(leg) for leg in key)


def render_tensor(x: TensorElt) -> str:
    parts = []
    for key in sorted(x.keys(), key=_tensor_sort_key):
        parts.append(_scaled(x.coefficient(key), render_key(key), wrap=True))
    return _join(parts)


def render_element(x) -> str:
    if isinstance(x, TensorElt):
        return render_tensor(x)
    if isinstance(x, UElt):
        return render_u(x)
    if isinstance(x, LieElt):
        return render_lie(x)
    if isinstance(x, TSeries):
        return render_series(x)
    scalar = coerce_scalar(x)
    if scalar is NotImplemented:
        raise TypeError(f"cannot render {x!r}")
    return scalar.render()


def _single_negative(x) -> bool:
    if isinstance(x, LaurentQ):
        return x.is_monomial() and next(iter(x.terms.values())) < 0
    if len(x) != 1:
        return False
    coeff = next(iter(x.items()))[1]
    return coeff.is_monomial() and next(iter(coeff.terms.values())) < 0


def render_series(s: TSeries) -> str:
    """``c0 + (c1) t + (c2) t^2 + O(t^3)``, skipping zero coefficients"""
    parts = []
    for k, coeff in enumerate(s.coeffs):
        if not coeff:
            continue
        if k == 0:
            parts.append(render_element(coeff))
            continue
        power = "t" if k == 1 else f"t^{k}"
        if _single_negative(coeff):
            parts.append(f"-({render_element(-coeff)}) {power}")
        else:
            parts.append(f"({render_element(coeff)}) {power}")
    if not parts:
        parts.append("0")
    remainder = s.order + 1
    parts.append("O(t)" if remainder == 1 else f"O(t^{remainder})")
    return _join(parts)


# -- JSON ---------------------------------------------------------------

def _mono_json(mono: PBWMono) -> List[str]:
    return [str(g) for g in mono]


def element_to_json(x) -> Dict[str, Any]:
    """Schema-stable JSON form of a scalar, U-element, tensor or series"""
    if isinstance(x, TSeries):
        return {
            "type": "series",
            "order": x.order,
            "arity": x.arity,
            "coeffs": [element_to_json(c) for c in x.coeffs],
        }
    if isinstance(x, TensorElt):
        return {
            "type": "tensor",
            "arity": x.arity,
            "terms": [
                {"coeff": x.coefficient(key).render(), "tensor": [_mono_json(leg) for leg in key]}
                for key in sorted(x.keys(), key=_tensor_sort_key)
            ],
        }
    if isinstance(x, LieElt):
        x = UElt.from_lie(x)
    if isinstance(x, UElt):
        return {
            "type": "u",
            "terms": [
                {"coeff": x.coefficient(mono).render(), "mono": _mono_json(mono)}
                for mono in sorted(x.keys(), key=_u_sort_key)
            ],
        }
    scalar = coerce_scalar(x)
    if scalar is NotImplemented:
        raise TypeError(f"cannot serialize {x!r}")
    return {"type": "scalar", "value": scalar.render()}
