"""
Twisted Hopf structures on U(W)[[t]] and the printed closed forms
"""
from .twist import (
    build_inverse_twist, build_twist, build_u, build_u_inv, check_cocycle,
    check_hopf, noncocommutativity_witness, twisted_antipode, twisted_counit,
    twisted_delta,
)
from .closedform import (
    CoeffTables, alpha_beta, cf_antipode, cf_delta, compare,
    mirror_transport_check, eta, gamma, rho, s_m,
)
from .compare import compare_values

__all__ = [
    "build_inverse_twist", "build_twist", "build_u", "build_u_inv", "check_cocycle",
    "check_hopf", "noncocommutativity_witness", "twisted_antipode", "twisted_counit",
    "twisted_delta",
    "CoeffTables", "alpha_beta", "cf_antipode", "cf_delta", "compare",
    "mirror_transport_check", "eta", "gamma", "rho", "s_m",
    "compare_values",
]
