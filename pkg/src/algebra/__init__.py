"""
Exact algebra: scalars, the Lie algebra, its enveloping algebra, and t-series
"""
from .scalars import LaurentQ, Q, gen_binomial, laurent_mul
from .liealg import GenId, Kind, LieElt, bracket, bracket_lin, tau
from .uea import (
    PBWMono, TensorElt, UElt, antipode0, counit0, delta0, falling, rising,
    straighten, tensor_apply, tensor_mul, u_mul,
)
from .series import TSeries, one_minus_Et_pow, ts_add, ts_inverse, ts_mul

__all__ = [
    "LaurentQ", "Q", "gen_binomial", "laurent_mul",
    "GenId", "Kind", "LieElt", "bracket", "bracket_lin", "tau",
    "PBWMono", "TensorElt", "UElt", "antipode0", "counit0", "delta0",
    "falling", "rising", "straighten", "tensor_apply", "tensor_mul", "u_mul",
    "TSeries", "one_minus_Et_pow", "ts_add", "ts_inverse", "ts_mul",
]
