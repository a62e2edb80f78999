"""
Sparse linear combinations over LaurentQ.

LieElt, UElt and TensorElt all store a map from basis keys to nonzero
LaurentQ coefficients; this module holds the shared vector-space part.
"""
from typing import Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple

from src.algebra.scalars import LaurentQ, ZERO, coerce_scalar


def accumulate(target: Dict, key: Hashable, coeff: LaurentQ) -> None:
    """target[key] += coeff, dropping the entry when it cancels"""
    if not coeff:
        return
    current = target.get(key)
    if current is None:
        target[key] = coeff
        return
    total = current + coeff
    if total:
        target[key] = total
    else:
        del target[key]


class LinearCombination:
    """Immutable finite sum of basis keys with LaurentQ coefficients"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Hashable, object]] = None):
        clean: Dict[Hashable, LaurentQ] = {}
        if terms:
            for key, coeff in terms.items():
                value = coerce_scalar(coeff)
                if value is NotImplemented:
                    raise TypeError(f"coefficient {coeff!r} is not a scalar")
                accumulate(clean, self._check_key(key), value)
        self._terms = clean
        self._hash = None

    def _check_key(self, key):
        return key

    def _like(self, clean: Dict[Hashable, LaurentQ]):
        """Wrap an already-canonical map in a new instance of this type"""
        obj = object.__new__(type(self))
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def _wrap(cls, clean: Dict[Hashable, LaurentQ]):
        obj = object.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Dict[Hashable, LaurentQ]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Hashable, LaurentQ]]:
        return self._terms.items()

    def keys(self) -> Iterable[Hashable]:
        return self._terms.keys()

    def coefficient(self, key: Hashable) -> LaurentQ:
        return self._terms.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    # -- vector-space structure -----------------------------------------

    def _compatible(self, other) -> bool:
        return type(other) is type(self)

    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            accumulate(out, key, coeff)
        return self._like(out)

    def __sub__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def scale(self, scalar) -> "LinearCombination":
        scalar = coerce_scalar(scalar)
        if scalar is NotImplemented:
            raise TypeError("scale() needs a scalar")
        if not scalar:
            return self._like({})
        return self._like({k: c * scalar for k, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not self._compatible(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash
