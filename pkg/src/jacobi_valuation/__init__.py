"""Exact computation of Jacobi sums J(ell, f) over prime fields and of the
criteria deciding how deeply J(ell, f) + 1 is divisible by pi_ell = zeta_ell - 1."""

__version__ = "0.1.0"

from .cyclotomic import CycInt, conj, cyclotomic_polynomial, pi_power_membership, valuation_floor
from .errors import DomainError, ParameterError
from .ff import FieldCtx, ParamSet, build_field_ctx, derive_param_set, find_smallest_primitive_root, ind, is_ell_power
from .jacobi import j_plus_one_val_floor, jacobi_sum
from .ringr import RElem, coeff, in_R_prime, omega, tau
from .sums import SumContext
from .theorems import VerifyReport, verify

__all__ = [
    "CycInt", "conj", "cyclotomic_polynomial", "pi_power_membership", "valuation_floor",
    "DomainError", "ParameterError",
    "FieldCtx", "ParamSet", "build_field_ctx", "derive_param_set", "find_smallest_primitive_root",
    "ind", "is_ell_power", "j_plus_one_val_floor", "jacobi_sum",
    "RElem", "coeff", "in_R_prime", "omega", "tau", "SumContext", "VerifyReport", "verify",
]
