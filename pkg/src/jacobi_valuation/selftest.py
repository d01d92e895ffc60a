"""Built-in invariant suite run by ``jacobi-valuation selftest``."""

from __future__ import annotations

import random
from typing import Callable, Iterator

from .binomial import BINOMIAL_IDENTITIES, random_identity_args
from .ff import build_field_ctx, derive_param_set, index_table_failures
from .ringr import crt_is_bijective, kernel_tau_check
from .sums import SumContext
from .theorems import check_eta_coefficients, check_recursion, check_t0_closed_form, verify
from .units import index_congruence_failures

SMALL_CASES = [(2, 3, 7), (2, 3, 13), (3, 2, 7), (3, 2, 31), (2, 5, 11), (5, 2, 11), (5, 3, 31), (3, 7, 43), (7, 2, 29)]
CRT_CASES = [(2, 3), (3, 2), (2, 5), (3, 5), (2, 7)]


def _checks(samples: int, seed: int) -> Iterator[tuple[str, Callable[[], bool]]]:
    rng = random.Random(seed)
    for name, pred in BINOMIAL_IDENTITIES.items():
        args = [random_identity_args(rng) for _ in range(samples)]
        yield f"binomial:{name} ({samples} instances)", lambda p=pred, a=args: all(p(*x) for x in a)

    for ell, f in CRT_CASES:
        yield f"crt:({ell},{f})", lambda ell=ell, f=f: crt_is_bijective(ell, f) and kernel_tau_check(ell, f)

    for ell, f, q in SMALL_CASES:
        ctx = build_field_ctx(q)
        params = derive_param_set(ctx, ell, f)
        sc = SumContext(ctx, params)
        tag = f"({ell},{f},{q})"
        yield f"index_table:{tag}", lambda c=ctx, p=params: not index_table_failures(c, p)
        yield f"index_congruences:{tag}", lambda c=ctx, p=params: not any(index_congruence_failures(c, p).values())
        yield f"t0_closed_form:{tag}", lambda s=sc: check_t0_closed_form(s)
        yield f"eta_coefficients:{tag}", lambda s=sc: check_eta_coefficients(s)
        yield f"recursion:{tag}", lambda s=sc: check_recursion(s)
        yield f"verify:{tag}", lambda c=ctx, p=params: verify(c, p).ok


def run_selftest(samples: int = 2000, seed: int = 0, inject_fault: bool = False, emit=print) -> tuple[int, str | None]:
    """Run every check in order; return (number passed, name of first failure or None)."""
    passed = 0
    for name, check in _checks(samples, seed):
        ok = check()
        if inject_fault and passed == 0:
            ok = False
        if not ok:
            emit(f"FAIL {name}")
            return passed, name
        emit(f"PASS {name}")
        passed += 1
    return passed, None
