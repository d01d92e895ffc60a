"""Prime fields F_q: generators, index (discrete log) tables, roots of unity.

Everything downstream is a function of the pair (q, g).  The index table is
dense, so q is capped by ``MAX_Q`` to keep memory bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParameterError

MAX_Q = 1 << 26


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n > 0, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_generator(g: int, q: int) -> bool:
    if not 1 <= g < q:
        return False
    if q == 2:
        return g == 1
    return all(pow(g, (q - 1) // p, q) != 1 for p in prime_factors(q - 1))


def find_smallest_primitive_root(q: int) -> int:
    if q < 3 or not is_prime(q):
        raise ParameterError(f"q={q} must be an odd prime")
    for g in range(2, q):
        if is_generator(g, q):
            return g
    raise AssertionError("unreachable: every prime field has a generator")


@dataclass(frozen=True)
class FieldCtx:
    q: int
    g: int
    ind_table: np.ndarray = field(repr=False, compare=False)
    pow_table: np.ndarray = field(repr=False, compare=False)

    def ind(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise DomainError("ind(0) is undefined")
        return int(self.ind_table[x])

    def pow_g(self, a: int) -> int:
        return pow(self.g, a % (self.q - 1), self.q)

    @property
    def ind_minus_one(self) -> int:
        return (self.q - 1) // 2


def build_field_ctx(q: int, g: int | None = None, max_q: int = MAX_Q) -> FieldCtx:
    """Build the index table of F_q with respect to g (default: smallest generator)."""
    if q < 3 or not is_prime(q):
        raise ParameterError(f"q={q} must be an odd prime")
    if q > max_q:
        raise ParameterError(f"q={q} exceeds the index-table bound {max_q}")
    if g is None:
        g = find_smallest_primitive_root(q)
    elif not is_generator(g % q, q):
        raise ParameterError(f"g={g} does not generate F_{q}^x")
    g %= q

    powers = np.empty(q - 1, dtype=np.int64)
    x = 1
    for a in range(q - 1):
        powers[a] = x
        x = x * g % q
    table = np.full(q, -1, dtype=np.int64)
    table[powers] = np.arange(q - 1, dtype=np.int64)
    table.flags.writeable = False
    powers.flags.writeable = False
    return FieldCtx(q=q, g=g, ind_table=table, pow_table=powers)


def ind(ctx: FieldCtx, x: int) -> int:
    return ctx.ind(x)


def is_ell_power(ctx: FieldCtx, x: int, ell: int) -> bool:
    """True iff x lies in the subgroup of ell-th powers of F_q^x."""
    if (ctx.q - 1) % ell:
        raise ParameterError(f"ell={ell} does not divide q-1={ctx.q - 1}")
    return ctx.ind(x) % ell == 0


@dataclass(frozen=True)
class ParamSet:
    ell: int
    f: int
    zeta_lf: int
    zeta_l: int
    zeta_f: int
    xi_l: int
    xi_f: int

    @property
    def n(self) -> int:
        return self.ell * self.f


def check_ell_f(ell: int, f: int) -> None:
    if not (is_prime(ell) and is_prime(f)) or ell == f:
        raise ParameterError(f"ell={ell}, f={f} must be distinct primes")


def derive_param_set(ctx: FieldCtx, ell: int, f: int) -> ParamSet:
    check_ell_f(ell, f)
    q = ctx.q
    if (q - 1) % (ell * f):
        raise ParameterError(f"ell*f={ell * f} does not divide q-1={q - 1}")
    zeta_lf = ctx.pow_g((q - 1) // (ell * f))
    zeta_f = pow(zeta_lf, ell, q)
    zeta_l = pow(zeta_lf, f, q)
    # xi_l^f = zeta_l with xi_l of order dividing ell forces xi_l = zeta_l^(f^-1 mod ell)
    xi_l = pow(zeta_l, pow(f, -1, ell), q)
    xi_f = pow(zeta_f, pow(ell, -1, f), q)
    assert xi_l * xi_f % q == zeta_lf
    return ParamSet(ell=ell, f=f, zeta_lf=zeta_lf, zeta_l=zeta_l, zeta_f=zeta_f, xi_l=xi_l, xi_f=xi_f)


def index_table_failures(ctx: FieldCtx, params: ParamSet | None = None) -> list[str]:
    """Names of the index-table invariants that fail (empty when all hold).

    Covers bijectivity of ind onto [0, q-2], ind(1) = 0, the inverse relation
    with the power table and, given params, the cyclotomic product relation
    sum_{a = j mod f, a = r mod ell} ind(1 - g^a) == ind(1 - xi_l^r xi_f^j) (mod q-1).
    """
    q = ctx.q
    out = []
    inds = ctx.ind_table[1:]
    if ctx.ind_table[1] != 0:
        out.append("ind_one")
    if not np.array_equal(np.sort(inds), np.arange(q - 1)):
        out.append("bijective")
    if not np.array_equal(ctx.ind_table[ctx.pow_table], np.arange(q - 1)):
        out.append("power_inverse")
    if params is not None:
        ell, f = params.ell, params.f
        a = np.arange(1, q - 1, dtype=np.int64)
        vals = ctx.ind_table[(1 - ctx.pow_table[a]) % q]
        buckets = np.zeros((f, ell), dtype=np.int64)
        np.add.at(buckets, (a % f, a % ell), vals)
        for r in range(ell):
            for j in range(1, f):
                target = (1 - pow(params.xi_l, r, q) * pow(params.xi_f, j, q)) % q
                if (int(buckets[j, r]) - ctx.ind(target)) % (q - 1):
                    out.append(f"cyclotomic_product[{r},{j}]")
    return out
