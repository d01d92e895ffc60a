"""Evaluation of the congruence criteria for J(ell, f) + 1 and their cross-checks.

Three families of conditions are computed along independent code paths that
share only the field context and parameter set:

* exact division of J(ell, f) + 1 by powers of pi_ell in Z[zeta_{ell f}];
* ell-th power tests on eta_{i,j} and 1 - xi_l^i xi_f^j in F_q;
* R' membership of the sums S(u, v) in (Z/ell)[t]/(t^f - 1).

``verify`` gathers all of them, plus the invariant suites, into a
``VerifyReport``.  Disagreements are recorded, never raised.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .cyclotomic import CycInt, conj, pi_power_membership, valuation_floor
from .errors import DomainError
from .ff import FieldCtx, ParamSet, index_table_failures, is_ell_power
from .jacobi import j_plus_one, jacobi_sum
from .ringr import RElem, coeff, in_R_prime, omega
from .sums import SumContext, recursion_residual, t0_closed_form
from .units import eta, eta_table, index_congruence_failures, one_minus_xi

log = logging.getLogger(__name__)


def _check_k(ell: int, k: int) -> None:
    if not 1 <= k <= ell - 1:
        raise DomainError(f"k={k} outside [1, {ell - 1}]")


def _half(f: int) -> int:
    return f // 2


# -- condition (1): exact division ------------------------------------------

def thm15_cond1(ctx: FieldCtx, ell: int, f: int, k: int, alpha: CycInt | None = None) -> bool:
    _check_k(ell, k)
    if alpha is None:
        alpha = j_plus_one(ctx, ell, f)
    return pi_power_membership(alpha, ell, f, k)


def thm16_cond1(ctx: FieldCtx, params: ParamSet, alpha: CycInt | None = None) -> bool:
    ell, f = params.ell, params.f
    if alpha is None:
        alpha = j_plus_one(ctx, ell, f)
    return pi_power_membership(alpha, ell, f, ell)


# -- conditions (2), (3): ell-th powers in F_q ------------------------------

def _etas_are_powers(ctx: FieldCtx, params: ParamSet, k: int, j_max: int) -> bool:
    return all(
        is_ell_power(ctx, eta(ctx, params, i, j), params.ell)
        for i in range(k - 1)
        for j in range(1, j_max + 1)
    )


def thm15_cond2(ctx: FieldCtx, params: ParamSet, k: int) -> bool:
    _check_k(params.ell, k)
    return _etas_are_powers(ctx, params, k, params.f - 1)


def thm15_cond3(ctx: FieldCtx, params: ParamSet, k: int) -> bool:
    _check_k(params.ell, k)
    return _etas_are_powers(ctx, params, k, _half(params.f))


def _xis_are_powers(ctx: FieldCtx, params: ParamSet, j_max: int) -> bool:
    ell, f = params.ell, params.f
    if (ctx.q - 1) % (ell * ell * f):
        return False
    return all(
        is_ell_power(ctx, one_minus_xi(ctx, params, i, j), ell)
        for i in range(ell)
        for j in range(1, j_max + 1)
    )


def thm16_cond2(ctx: FieldCtx, params: ParamSet) -> bool:
    return _xis_are_powers(ctx, params, params.f - 1)


def thm16_cond3(ctx: FieldCtx, params: ParamSet) -> bool:
    return _xis_are_powers(ctx, params, _half(params.f))


def eta_matrix_condition(ctx: FieldCtx, params: ParamSet) -> bool:
    """ind eta_{i,j} == 0 (mod ell) for i <= ell-3, and ind eta_{ell-2,j} + (q-1)/(ell f) == 0."""
    ell, f = params.ell, params.f
    m = (ctx.q - 1) // (ell * f)
    tab = eta_table(ctx, params)
    for j in range(1, f):
        if any(tab.ind(i, j) % ell for i in range(ell - 2)):
            return False
        if (tab.ind(ell - 2, j) + m) % ell:
            return False
    return True


# -- R' membership of S(u, v) -----------------------------------------------

def su1_chain(sc: SumContext, k: int) -> bool:
    """S(0, 1), S(1, 1), ..., S(k-2, 1) all lie in R'."""
    return all(in_R_prime(sc.S(u, 1)) for u in range(k - 1))


def suv_grid(sc: SumContext, k: int) -> bool:
    """S(u, v) in R' for all u >= 0, v >= 1 with u + v <= k-1."""
    return all(in_R_prime(sc.S(u, v)) for v in range(1, k) for u in range(k - v))


def s0v_chain(sc: SumContext, k: int) -> bool:
    """S(0, 1), ..., S(0, k-1) all lie in R'."""
    return all(in_R_prime(sc.S(0, v)) for v in range(1, k))


def s_chain_condition_15(sc: SumContext, k: int) -> bool:
    _check_k(sc.ell, k)
    return s0v_chain(sc, k)


def s_chain_condition_16(sc: SumContext) -> bool:
    """S(0,1), ..., S(ell-3,1) and S(ell-2,1) + m(1 + ... + t^(f-1)) in R', m = (q-1)/(ell f)."""
    ell = sc.ell
    shifted = sc.S(ell - 2, 1) + sc.m * RElem.norm_element(ell, sc.f)
    return su1_chain(sc, ell - 1) and in_R_prime(shifted)


def s0v_chain_16(sc: SumContext) -> bool:
    """S(0,1), ..., S(0,ell-2) and S(0,ell-1) - m(1 + ... + t^(f-1)) in R'."""
    ell = sc.ell
    shifted = sc.S(0, ell - 1) - sc.m * RElem.norm_element(ell, sc.f)
    return s0v_chain(sc, ell - 1) and in_R_prime(shifted)


# -- invariant suites ---------------------------------------------------------

def check_t0_closed_form(sc: SumContext) -> bool:
    return all(sc.T(0, i) == t0_closed_form(sc.ctx.q, sc.ell, i) for i in range(sc.ell))


def check_eta_coefficients(sc: SumContext) -> bool:
    tab = eta_table(sc.ctx, sc.params)
    return all(
        (coeff(sc.S(i, 1), j) - tab.ind(i, j)) % sc.ell == 0
        for i in range(sc.ell)
        for j in range(1, sc.f)
    )


def check_recursion(sc: SumContext) -> bool:
    return all(
        in_R_prime(recursion_residual(sc, i, s))
        for i in range(1, sc.ell - 1)
        for s in range(1, i + 1)
    )


def check_w_bridge(sc: SumContext) -> bool:
    """S(0, i) in R' iff W(0, i) = 0, including the shifted i = ell-1 case."""
    ell = sc.ell
    for i in range(1, ell - 1):
        if in_R_prime(sc.S(0, i)) != (not any(sc.W(0, i))):
            return False
    shifted = sc.S(0, ell - 1) - sc.m * RElem.norm_element(ell, sc.f)
    return in_R_prime(shifted) == (not any(omega(shifted))) == (not any(sc.W(0, ell - 1)))


def check_recursion_consequences(sc: SumContext) -> bool:
    """Consequences of the recursion under the hypothesis S(u, v) in R' for u + v <= i, v >= 1."""
    ell = sc.ell
    for i in range(1, ell - 1):
        if not suv_grid(sc, i + 1):
            continue
        for s in range(1, i + 1):
            diff = (i - s + 1) * sc.S(i - s + 1, s) - (s + 1) * sc.S(i - s, s + 1)
            if not in_R_prime(diff):
                return False
        members = {in_R_prime(sc.S(i - s, s + 1)) for s in range(i + 1)}
        if len(members) != 1:
            return False
    return True


def check_magnitude(ctx: FieldCtx, ell: int, f: int, j: CycInt | None = None) -> bool:
    if j is None:
        j = jacobi_sum(ctx, ell, f, ell, f)
    return j * conj(j) == ctx.q


# -- report -------------------------------------------------------------------

@dataclass
class Thm15Row:
    k: int
    cond1: bool
    cond2: bool
    cond3: bool

    @property
    def agree(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3

    def to_dict(self) -> dict:
        return {"k": self.k, "cond1": self.cond1, "cond2": self.cond2, "cond3": self.cond3, "agree": self.agree}


@dataclass
class Thm16Row:
    cond1: bool
    cond2: bool
    cond3: bool

    @property
    def agree(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3

    def to_dict(self) -> dict:
        return {"cond1": self.cond1, "cond2": self.cond2, "cond3": self.cond3, "agree": self.agree}


CHECK_NAMES = (
    "lemma44", "lemma61", "lemma71", "magnitude", "lemma92",
    "index_congruences", "w_bridge", "s0v_valuation", "chain_equivalence", "su1_chain_16", "recursion_consequences", "index_table", "floor",
)


@dataclass
class VerifyReport:
    ell: int
    f: int
    q: int
    g: int
    k_cap: int
    val_floor: int
    thm15: list[Thm15Row]
    thm16: Thm16Row
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def floor_capped(self) -> bool:
        """The floor hit k_cap, so it is only a lower bound on the valuation."""
        return self.val_floor >= self.k_cap

    @property
    def beyond_theorem(self) -> bool:
        return self.k_cap > self.ell

    @property
    def ok(self) -> bool:
        return all(r.agree for r in self.thm15) and self.thm16.agree and all(self.checks.values())

    def failures(self) -> list[str]:
        out = [f"thm15[k={r.k}]" for r in self.thm15 if not r.agree]
        if not self.thm16.agree:
            out.append("thm16")
        out.extend(name for name, passed in self.checks.items() if not passed)
        return out

    def condition_vector(self) -> tuple:
        """Truth values that must not depend on the choice of generator."""
        return (
            tuple((r.k, r.cond1, r.cond2, r.cond3) for r in self.thm15),
            (self.thm16.cond1, self.thm16.cond2, self.thm16.cond3),
            self.val_floor,
        )

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "f": self.f,
            "q": self.q,
            "g": self.g,
            "val_floor": self.val_floor,
            "k_cap": self.k_cap,
            "floor_capped": self.floor_capped,
            "beyond_theorem": self.beyond_theorem,
            "thm15": [r.to_dict() for r in self.thm15],
            "thm16": self.thm16.to_dict(),
            "checks": {name: self.checks[name] for name in CHECK_NAMES if name in self.checks},
        }


def _guard(name: str, fn, *args) -> bool:
    try:
        return bool(fn(*args))
    except Exception:  # a crashing check is a failing check, not a crashing verify
        log.exception("check %s raised", name)
        return False


def verify(ctx: FieldCtx, params: ParamSet, k_cap: int | None = None) -> VerifyReport:
    ell, f = params.ell, params.f
    if k_cap is None:
        k_cap = ell
    if k_cap < 1:
        raise DomainError(f"k_cap must be >= 1, got {k_cap}")

    jac = jacobi_sum(ctx, ell, f, ell, f)
    alpha = jac + 1
    sc = SumContext(ctx, params)

    thm15 = [
        Thm15Row(
            k=k,
            cond1=thm15_cond1(ctx, ell, f, k, alpha),
            cond2=thm15_cond2(ctx, params, k),
            cond3=thm15_cond3(ctx, params, k),
        )
        for k in range(1, ell)
    ]
    thm16 = Thm16Row(
        cond1=thm16_cond1(ctx, params, alpha),
        cond2=thm16_cond2(ctx, params),
        cond3=thm16_cond3(ctx, params),
    )
    floor = valuation_floor(alpha, ell, f, k_cap)

    def s0v_valuation():
        return all(r.cond1 == s0v_chain(sc, r.k) for r in thm15) and thm16.cond1 == s0v_chain_16(sc)

    def chain_equivalence():
        return all(su1_chain(sc, r.k) == suv_grid(sc, r.k) == s0v_chain(sc, r.k) == r.cond1 for r in thm15)

    def floor_consistent():
        # floor >= 1 always; floor agrees with the per-k memberships below the cap
        if floor < 1:
            return False
        memb = [r.cond1 for r in thm15] + [thm16.cond1]
        return all(m == (k <= floor) for k, m in enumerate(memb, start=1) if k <= k_cap)

    checks = {
        "lemma44": _guard("lemma44", check_t0_closed_form, sc),
        "lemma61": _guard("lemma61", check_eta_coefficients, sc),
        "lemma71": _guard("lemma71", check_recursion, sc),
        "magnitude": _guard("magnitude", check_magnitude, ctx, ell, f, jac),
        "lemma92": _guard("lemma92", lambda: eta_matrix_condition(ctx, params) == thm16.cond1),
        "index_congruences": _guard("index_congruences", lambda: not any(index_congruence_failures(ctx, params).values())),
        "w_bridge": _guard("w_bridge", check_w_bridge, sc),
        "s0v_valuation": _guard("s0v_valuation", s0v_valuation),
        "chain_equivalence": _guard("chain_equivalence", chain_equivalence),
        "su1_chain_16": _guard("su1_chain_16", lambda: s_chain_condition_16(sc) == thm16.cond1),
        "recursion_consequences": _guard("recursion_consequences", check_recursion_consequences, sc),
        "index_table": _guard("index_table", lambda: not index_table_failures(ctx, params)),
        "floor": _guard("floor", floor_consistent),
    }
    return VerifyReport(
        ell=ell, f=f, q=ctx.q, g=ctx.g, k_cap=k_cap, val_floor=floor,
        thm15=thm15, thm16=thm16, checks=checks,
    )
