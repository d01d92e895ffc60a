"""The elements eta_{i,j} of F_q^x and the index congruences tying them to 1 - xi_l^i xi_f^j.

    eta_{i,j} = prod_{r=0}^{ell-1} (1 - xi_l^r xi_f^j)^C(r, i)
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import binom
from .errors import DomainError
from .ff import FieldCtx, ParamSet


def kronecker_delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _check_ij(params: ParamSet, i: int, j: int) -> None:
    if not 0 <= i <= params.ell - 1:
        raise DomainError(f"i={i} outside [0, {params.ell - 1}]")
    if not 1 <= j <= params.f - 1:
        raise DomainError(f"j={j} outside [1, {params.f - 1}]")


def one_minus_xi(ctx: FieldCtx, params: ParamSet, i: int, j: int) -> int:
    """1 - xi_l^i xi_f^j in F_q; nonzero because xi_f^j != 1."""
    _check_ij(params, i, j)
    q = ctx.q
    return (1 - pow(params.xi_l, i, q) * pow(params.xi_f, j, q)) % q


def eta(ctx: FieldCtx, params: ParamSet, i: int, j: int) -> int:
    _check_ij(params, i, j)
    q = ctx.q
    out = 1
    for r in range(params.ell):
        out = out * pow(one_minus_xi(ctx, params, r, j), binom(r, i), q) % q
    return out


def eta_zero_row(ctx: FieldCtx, params: ParamSet, m: int) -> int:
    """eta_{0,m} via the closed form 1 - xi_f^(m ell)."""
    if not 1 <= m <= params.f - 1:
        raise DomainError(f"m={m} outside [1, {params.f - 1}]")
    q = ctx.q
    return (1 - pow(params.xi_f, m * params.ell, q)) % q


@dataclass(frozen=True)
class EtaTable:
    """values[i][j-1] = eta_{i,j}; inds holds the matching indices."""

    values: tuple[tuple[int, ...], ...]
    inds: tuple[tuple[int, ...], ...]

    def ind(self, i: int, j: int) -> int:
        return self.inds[i][j - 1]


def eta_table(ctx: FieldCtx, params: ParamSet) -> EtaTable:
    values = tuple(
        tuple(eta(ctx, params, i, j) for j in range(1, params.f))
        for i in range(params.ell)
    )
    inds = tuple(tuple(ctx.ind(v) for v in row) for row in values)
    return EtaTable(values, inds)


def index_congruence_failures(ctx: FieldCtx, params: ParamSet) -> dict[str, list]:
    """Evaluate every index congruence relating eta and 1 - xi_l^i xi_f^j.

    Returns a mapping from part name to the list of failing parameter tuples
    (empty lists mean the part holds).  Parts:

    eta_zero_row     eta_{0,m} == 1 - xi_f^(m ell)
    ind_xi           ind xi_f == 0 and ind xi_l == (q-1)/(ell f)   (mod ell)
    eta_expansion    ind eta_{i,j} == sum_r C(r,i) ind(1 - xi_l^r xi_f^j)   (mod q-1)
    eta_reflection   ind eta_{i,f-j} in terms of ind eta_{k,j}, k <= i   (mod ell)
    telescoping      ind(1 - xi_l^i xi_f^j) via eta_{0,m} and eta_{ell-2-a,j}   (mod ell)
    xi_reflection    ind(1 - xi_l^i xi_f^j) vs ind(1 - xi_l^(ell-i) xi_f^(f-j))   (mod ell)
    """
    ell, f, q = params.ell, params.f, ctx.q
    m_idx = (q - 1) // (ell * f)
    ind_m1 = ctx.ind(q - 1)
    assert ind_m1 == ctx.ind_minus_one
    tab = eta_table(ctx, params)
    one_xi = {(i, j): ctx.ind(one_minus_xi(ctx, params, i, j)) for i in range(ell) for j in range(1, f)}
    fails: dict[str, list] = {k: [] for k in (
        "eta_zero_row", "ind_xi", "eta_expansion", "eta_reflection", "telescoping", "xi_reflection")}

    for m in range(1, f):
        if eta_zero_row(ctx, params, m) != tab.values[0][m - 1]:
            fails["eta_zero_row"].append((m,))

    if ctx.ind(params.xi_f) % ell or (ctx.ind(params.xi_l) - m_idx) % ell:
        fails["ind_xi"].append(())

    for i in range(ell):
        for j in range(1, f):
            expect = sum(binom(r, i) * one_xi[r, j] for r in range(ell))
            if (tab.ind(i, j) - expect) % (q - 1):
                fails["eta_expansion"].append((i, j))

            rhs = (kronecker_delta(i, ell - 1) * (ind_m1 - m_idx)
                   - kronecker_delta(i, ell - 2) * m_idx
                   + (-1) ** i * sum(binom(i - 1, i - k) * tab.ind(k, j) for k in range(i + 1)))
            if (tab.ind(i, f - j) - rhs) % ell:
                fails["eta_reflection"].append((i, j))

    for i in range(1, ell):
        for j in range(1, f):
            m = next(m for m in range(1, f) if (m * ell - j) % f == 0)
            rhs = tab.ind(0, m) - sum(
                binom(s, a) * tab.ind(ell - 2 - a, j)
                for s in range(ell - 1 - i, ell - 1)
                for a in range(s + 1)
            )
            if (one_xi[i, j] - rhs) % ell:
                fails["telescoping"].append((i, j))

            rhs = ind_m1 + i * m_idx + one_xi[(ell - i) % ell, f - j]
            if (one_xi[i, j] - rhs) % ell:
                fails["xi_reflection"].append((i, j))
    return fails
