"""Jacobi sums J(a, b) = sum_x zeta^(a ind x + b ind(1 - x)) as exact cyclotomic integers.

The character is fixed as g^k -> zeta_{ell f}^k.  Exponents are binned into
an ell*f histogram first, so only one reduction modulo Phi_{ell f} happens.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import CycInt, valuation_floor
from .errors import DomainError, ParameterError
from .ff import FieldCtx, check_ell_f


def jacobi_sum(ctx: FieldCtx, ell: int, f: int, a: int, b: int) -> CycInt:
    n = ell * f
    check_ell_f(ell, f)
    if (ctx.q - 1) % n:
        raise ParameterError(f"ell*f={n} does not divide q-1={ctx.q - 1}")
    if a % n == 0 or b % n == 0:
        raise DomainError(f"a={a}, b={b} must be nonzero mod {n}")
    q = ctx.q
    xs = np.arange(2, q, dtype=np.int64)
    exps = (a * ctx.ind_table[xs] + b * ctx.ind_table[(1 - xs) % q]) % n
    hist = np.bincount(exps, minlength=n)
    return CycInt.from_poly(n, [int(c) for c in hist])


def j_plus_one(ctx: FieldCtx, ell: int, f: int) -> CycInt:
    return jacobi_sum(ctx, ell, f, ell, f) + 1


def j_plus_one_val_floor(ctx: FieldCtx, ell: int, f: int, cap: int) -> int:
    if cap < 1:
        raise DomainError(f"cap must be >= 1, got {cap}")
    return valuation_floor(j_plus_one(ctx, ell, f), ell, f, cap)
