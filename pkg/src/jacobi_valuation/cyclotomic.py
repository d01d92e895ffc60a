"""Exact arithmetic in Z[zeta_n] and Q(zeta_n).

Elements are coordinate vectors over the power basis 1, z, ..., z^(phi(n)-1)
modulo the n-th cyclotomic polynomial.  Since this basis is an integral basis
of Z[zeta_n], an element of Q(zeta_n) is integral exactly when every
coordinate has denominator 1; the pi-power membership test relies on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Long division a = quot*b + rem.  Exact over Z when b is monic."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead = b[-1]
    monic = lead == 1
    if len(rem) < len(b):
        return [], _trim(rem)
    quot = [0] * (len(rem) - len(b) + 1)
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c == 0:
            continue
        c = c if monic else Fraction(c) / lead
        quot[k] = c
        for j, y in enumerate(b):
            rem[k + j] -= c * y
    return _trim(quot), _trim(rem[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of Phi_n."""
    if n < 1:
        raise DomainError(f"conductor must be >= 1, got {n}")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, rem = poly_divmod(p, cyclotomic_polynomial(d))
            assert not rem
    return tuple(p)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def reduce_mod_phi(p: Sequence, n: int) -> list:
    """Reduce a polynomial in zeta_n to a coordinate vector of length phi(n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    p = list(p)
    for k in range(len(p) - 1, deg - 1, -1):
        c = p[k]
        if c == 0:
            continue
        # subtract c * x^(k-deg) * Phi_n; Phi_n is monic
        for j in range(deg + 1):
            p[k - deg + j] -= c * phi[j]
    p = p[:deg]
    return p + [0] * (deg - len(p))


@dataclass(frozen=True)
class CycInt:
    """Element of Z[zeta_n] (or Q(zeta_n) when coordinates are Fractions)."""

    n: int
    coords: tuple

    @classmethod
    def from_poly(cls, n: int, p: Sequence) -> "CycInt":
        return cls(n, tuple(reduce_mod_phi(p, n)))

    @classmethod
    def const(cls, n: int, c) -> "CycInt":
        return cls.from_poly(n, [c])

    @classmethod
    def zeta_power(cls, n: int, e: int) -> "CycInt":
        e %= n
        return cls.from_poly(n, [0] * e + [1])

    @classmethod
    def zero(cls, n: int) -> "CycInt":
        return cls.const(n, 0)

    def _check(self, other: "CycInt") -> None:
        if self.n != other.n:
            raise DomainError(f"conductor mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CycInt.const(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycInt(self.n, tuple(a * other for a in self.coords))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt.from_poly(self.n, poly_mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        out = CycInt.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coords)

    def as_rational(self) -> "CycInt":
        return CycInt(self.n, tuple(Fraction(c) for c in self.coords))

    def as_integer(self) -> "CycInt":
        if not self.is_integral():
            raise DomainError("element is not integral")
        return CycInt(self.n, tuple(int(c) for c in self.coords))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycInt.const(self.n, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.n == other.n and all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash((self.n, tuple(Fraction(c) for c in self.coords)))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


CycRat = CycInt


def conj(a: CycInt) -> CycInt:
    """Complex conjugation zeta_n -> zeta_n^(n-1)."""
    n = a.n
    p = [0] * n
    for i, c in enumerate(a.coords):
        p[(-i) % n] += c
    return CycInt.from_poly(n, p)


def inverse(a: CycInt) -> CycInt:
    """Inverse in Q(zeta_n) by extended Euclid against Phi_n."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero")
    n = a.n
    # invariant: r0 = s0*a (mod Phi), r1 = s1*a (mod Phi)
    r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(n)], _trim([Fraction(c) for c in a.coords])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quot, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        qs = poly_mul(quot, s1)
        s0, s1 = s1, _trim([x - y for x, y in _zip_pad(s0, qs)])
    if not r1:
        raise ZeroDivisionError("element shares a factor with Phi_n")
    c = r1[0]
    return CycInt.from_poly(n, [x / c for x in s1])


def _zip_pad(a: list, b: list):
    m = max(len(a), len(b))
    return zip(a + [0] * (m - len(a)), b + [0] * (m - len(b)))


def pi_ell(ell: int, f: int) -> CycInt:
    """pi_ell = zeta_ell - 1 = zeta_{ell f}^f - 1."""
    return CycInt.zeta_power(ell * f, f) - 1


@lru_cache(maxsize=None)
def _pi_inverse(ell: int, f: int) -> CycInt:
    return inverse(pi_ell(ell, f).as_rational())


def pi_power_membership(alpha: CycInt, ell: int, f: int, k: int) -> bool:
    """True iff alpha / pi_ell^k lies in Z[zeta_{ell f}]."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if alpha.n != ell * f:
        raise DomainError(f"conductor {alpha.n} != ell*f = {ell * f}")
    if k == 0:
        return alpha.is_integral()
    return (alpha * _pi_inverse(ell, f) ** k).is_integral()


def valuation_floor(alpha: CycInt, ell: int, f: int, cap: int) -> int:
    """Largest k <= cap with alpha in pi_ell^k Z[zeta_{ell f}] (cap if alpha is deep enough)."""
    if cap < 0:
        raise DomainError(f"cap must be >= 0, got {cap}")
    inv = _pi_inverse(ell, f)
    cur = alpha.as_rational()
    if not cur.is_integral():
        raise DomainError("alpha is not integral")
    for k in range(cap):
        # alpha/pi^(k+1) integral iff alpha/pi^k integral and divisible once more
        cur = cur * inv
        if not cur.is_integral():
            return k
    return cap
