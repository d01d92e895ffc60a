"""The ring R = (Z/ell)[t]/(t^f - 1) with its maps tau and omega.

tau sends t to 1 (landing in Z/ell); omega sends t to the class of zeta_f,
realised concretely as (Z/ell)[t]/Phi_f(t), a model of O_M / ell O_M.
R' is the subring of constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .cyclotomic import cyclotomic_polynomial
from .errors import DomainError


@dataclass(frozen=True)
class RElem:
    ell: int
    f: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.f:
            raise DomainError(f"expected {self.f} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, ell: int, f: int, coeffs: Iterable[int]) -> "RElem":
        """Reduce an arbitrary coefficient list using t^f = 1 and mod ell."""
        out = [0] * f
        for j, c in enumerate(coeffs):
            out[j % f] += int(c)
        return cls(ell, f, tuple(c % ell for c in out))

    @classmethod
    def const(cls, ell: int, f: int, c: int) -> "RElem":
        return cls.from_coeffs(ell, f, [c])

    @classmethod
    def t_power(cls, ell: int, f: int, e: int) -> "RElem":
        coeffs = [0] * f
        coeffs[e % f] = 1
        return cls(ell, f, tuple(coeffs))

    @classmethod
    def norm_element(cls, ell: int, f: int) -> "RElem":
        """1 + t + ... + t^(f-1)."""
        return cls(ell, f, (1 % ell,) * f)

    def _coerce(self, other) -> "RElem":
        if isinstance(other, int):
            return RElem.const(self.ell, self.f, other)
        if isinstance(other, RElem):
            if (other.ell, other.f) != (self.ell, self.f):
                raise DomainError("ring mismatch")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RElem(self.ell, self.f, tuple((a + b) % self.ell for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return RElem(self.ell, self.f, tuple(-a % self.ell for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RElem(self.ell, self.f, tuple(a * other % self.ell for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.f
        out = [0] * f
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % f] += a * b
        return RElem(self.ell, f, tuple(c % self.ell for c in out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(terms) or "0"


def tau(r: RElem) -> int:
    return sum(r.coeffs) % r.ell


def omega(r: RElem) -> tuple[int, ...]:
    """Residue of r modulo Phi_f(t) over Z/ell, as f-1 coefficients."""
    ell = r.ell
    phi = cyclotomic_polynomial(r.f)
    deg = len(phi) - 1
    p = list(r.coeffs)
    for k in range(len(p) - 1, deg - 1, -1):
        c = p[k]
        if c:
            for j in range(deg + 1):
                p[k - deg + j] = (p[k - deg + j] - c * phi[j]) % ell
    return tuple(c % ell for c in p[:deg])


def coeff(r: RElem, j: int) -> int:
    if not 0 <= j <= r.f - 1:
        raise DomainError(f"coefficient index {j} outside [0, {r.f - 1}]")
    return r.coeffs[j]


def in_R_prime(r: RElem) -> bool:
    return not any(r.coeffs[1:])


def all_elements(ell: int, f: int):
    for coeffs in product(range(ell), repeat=f):
        yield RElem(ell, f, coeffs)


def crt_is_bijective(ell: int, f: int) -> bool:
    """Exhaustively check that r -> (omega(r), tau(r)) is a bijection onto (Z/ell)^(f-1) x Z/ell."""
    images = {(omega(r), tau(r)) for r in all_elements(ell, f)}
    target = {(w, c) for w in product(range(ell), repeat=f - 1) for c in range(ell)}
    return images == target and len(images) == ell ** f


def kernel_tau_check(ell: int, f: int) -> bool:
    """On ker tau: omega(r) = 0 iff r = 0 iff r in R'."""
    for r in all_elements(ell, f):
        if tau(r):
            continue
        w_zero = not any(omega(r))
        if not (w_zero == r.is_zero() == in_R_prime(r)):
            return False
    return True
