"""Weighted character sums S(u, v) in R and their images T = tau(S), W = omega(S).

    S(u, v) = sum over x in F_q minus {0, 1} of
              C(ind x, u) * C(ind(1 - x), v) * t^(ind x)

Coefficients live in Z/ell, and t^f = 1, so only ind x mod f matters for the
exponent.  For u, v < ell the binomials reduce through ind mod ell.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .binomial import binom_mod_row
from .errors import DomainError
from .ff import FieldCtx, ParamSet
from .ringr import RElem, omega, tau


class SumContext:
    """Precomputed index data for one (ctx, params) plus a cache of S values."""

    def __init__(self, ctx: FieldCtx, params: ParamSet, cache: bool = True):
        self.ctx = ctx
        self.params = params
        self.ell = params.ell
        self.f = params.f
        q = ctx.q
        xs = np.arange(2, q, dtype=np.int64)
        self.ind_x = ctx.ind_table[xs]
        self.ind_1mx = ctx.ind_table[(1 - xs) % q]
        self.t_exp = self.ind_x % self.f
        self._cache: dict[tuple[int, int], RElem] | None = {} if cache else None

    def _binom_weights(self, inds: np.ndarray, b: int) -> np.ndarray:
        ell = self.ell
        if b < ell:
            row = np.asarray(binom_mod_row(b, ell), dtype=np.int64)
            return row[inds % ell]
        # b >= ell: C(a, b) mod ell is no longer a function of a mod ell
        lut = np.array([comb(a, b) % ell for a in range(self.ctx.q - 1)], dtype=np.int64)
        return lut[inds]

    def S(self, u: int, v: int) -> RElem:
        if u < 0 or v < 0:
            raise DomainError(f"S(u, v) needs u, v >= 0, got ({u}, {v})")
        key = (u, v)
        if self._cache is not None and key in self._cache:
            return self._cache[key]
        w = self._binom_weights(self.ind_x, u) * self._binom_weights(self.ind_1mx, v) % self.ell
        sums = np.bincount(self.t_exp, weights=w, minlength=self.f)
        val = RElem.from_coeffs(self.ell, self.f, (int(round(c)) for c in sums))
        if self._cache is not None:
            self._cache[key] = val
        return val

    def T(self, u: int, v: int) -> int:
        return tau(self.S(u, v))

    def W(self, u: int, v: int) -> tuple[int, ...]:
        return omega(self.S(u, v))

    @property
    def m(self) -> int:
        """(q - 1) / (ell f), the index of zeta_{ell f}."""
        return (self.ctx.q - 1) // (self.ell * self.f)


def S(sc: SumContext, u: int, v: int) -> RElem:
    return sc.S(u, v)


def T(sc: SumContext, u: int, v: int) -> int:
    return sc.T(u, v)


def W(sc: SumContext, u: int, v: int) -> tuple[int, ...]:
    return sc.W(u, v)


def t0_closed_form(q: int, ell: int, i: int) -> int:
    """Predicted T(0, i) mod ell for i in [0, ell-1]: -1, then 0, then (q-1)/ell."""
    if not 0 <= i <= ell - 1:
        raise DomainError(f"i={i} outside [0, {ell - 1}]")
    if i == 0:
        return -1 % ell
    if i == ell - 1:
        return (q - 1) // ell % ell
    return 0


def recursion_residual(sc: SumContext, i: int, s: int) -> RElem:
    """LHS minus RHS of the S(u, v) recursion; lies in R' whenever the recursion holds."""
    ell = sc.ell
    if not (1 <= i <= ell - 2 and 1 <= s <= i):
        raise DomainError(f"need 1 <= s <= i <= ell-2, got i={i}, s={s}, ell={ell}")
    lhs = (i - s + 1) * sc.S(i - s + 1, s) - (s + 1) * sc.S(i - s, s + 1)
    rhs = RElem.const(ell, sc.f, 0)
    for r in range(i - s + 1):
        rhs = rhs + sc.S(i - s - r, s) * sc.S(r, 1)
    for k in range(1, s + 1):
        rhs = rhs - sc.T(1, s - k) * sc.S(i - s, k)
    rhs = rhs - (i - 2 * s) * sc.S(i - s, s)
    return lhs - rhs
