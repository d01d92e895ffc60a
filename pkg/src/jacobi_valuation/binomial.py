"""Binomial coefficients C(a, b) for any integer a and b >= 0."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import DomainError


def binom(a: int, b: int) -> int:
    """Exact a(a-1)...(a-b+1)/b!; defined for negative a as well."""
    if b < 0:
        raise DomainError(f"binom bottom must be >= 0, got {b}")
    if 0 <= a < b:
        return 0
    num = 1
    for k in range(b):
        num *= a - k
    return num // factorial(b)


@lru_cache(maxsize=None)
def _binom_mod_table(ell: int) -> tuple[tuple[int, ...], ...]:
    # table[r][b] = C(r, b) mod ell for r, b in [0, ell-1]
    return tuple(tuple(binom(r, b) % ell for b in range(ell)) for r in range(ell))


def binom_mod(a: int, b: int, ell: int) -> int:
    """C(a, b) mod ell for 0 <= b <= ell-1, which depends only on a mod ell."""
    if not 0 <= b <= ell - 1:
        raise DomainError(f"binom_mod needs 0 <= b <= ell-1, got b={b}, ell={ell}")
    return _binom_mod_table(ell)[a % ell][b]


def binom_mod_row(b: int, ell: int) -> list[int]:
    """[C(r, b) mod ell for r in 0..ell-1]."""
    if not 0 <= b <= ell - 1:
        raise DomainError(f"binom_mod needs 0 <= b <= ell-1, got b={b}, ell={ell}")
    return [_binom_mod_table(ell)[r][b] for r in range(ell)]


def signed_range_sum(term, a: int) -> int:
    """sum_{c=0}^{a-1} term(c), with the telescoping convention -sum_{c=a}^{-1} for a < 0."""
    if a >= 0:
        return sum(term(c) for c in range(a))
    return -sum(term(c) for c in range(a, 0))


def _symmetry(a, b, c, ell, a2):
    return not 0 <= b <= a or binom(a, b) == binom(a, a - b)


def _absorption(a, b, c, ell, a2):
    return (b + 1) * binom(a, b + 1) == a * binom(a - 1, b)


def _pascal(a, b, c, ell, a2):
    return binom(a, b + 1) == binom(a - 1, b) + binom(a - 1, b + 1)


def _pascal_weighted(a, b, c, ell, a2):
    return a * binom(a, b) == (b + 1) * binom(a, b + 1) + b * binom(a, b)


def _hockey_stick(a, b, c, ell, a2):
    return signed_range_sum(lambda x: binom(x, b), a) == binom(a, b + 1)


def _vandermonde(a, b, c, ell, a2):
    return binom(a + a2, c) == sum(binom(a, d) * binom(a2, c - d) for d in range(c + 1))


def _negation(a, b, c, ell, a2):
    rhs = sum(binom(b - 1, b - k) * binom(a, k) for k in range(b + 1))
    return binom(-a, b) == (-1) ** b * rhs


def _weighted_hockey_stick(a, b, c, ell, a2):
    lhs = signed_range_sum(lambda x: x * binom(x, b), a)
    return lhs == (a - 1) * binom(a, b + 1) - binom(a, b + 2)


def _reduce_top(a, b, c, ell, a2):
    b %= ell
    return (binom(a, b) - binom(a2, b)) % ell == 0


def _vanishing(a, b, c, ell, a2):
    a0 = a * ell
    b0 = b if b % ell else b + 1
    return binom(a0, b0) % ell == 0


def _frobenius(a, b, c, ell, a2):
    return (binom(a * ell, b * ell) - binom(a, b)) % ell == 0


# name -> predicate(a, b, c, ell, a2) with a2 == a (mod ell)
BINOMIAL_IDENTITIES = {
    "symmetry": _symmetry,
    "absorption": _absorption,
    "pascal": _pascal,
    "pascal_weighted": _pascal_weighted,
    "hockey_stick": _hockey_stick,
    "vandermonde": _vandermonde,
    "negation": _negation,
    "weighted_hockey_stick": _weighted_hockey_stick,
    "reduce_top": _reduce_top,
    "vanishing_mod_ell": _vanishing,
    "frobenius_mod_ell": _frobenius,
}


def random_identity_args(rng, ells=(2, 3, 5, 7)) -> tuple[int, int, int, int, int]:
    a = rng.randint(-50, 50)
    b = rng.randint(0, 12)
    c = rng.randint(0, 12)
    ell = rng.choice(ells)
    return a, b, c, ell, a + ell * rng.randint(-10, 10)
