import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from jacobi_valuation.errors import DomainError, ParameterError
from jacobi_valuation.ff import (
    build_field_ctx, derive_param_set, find_smallest_primitive_root, ind,
    index_table_failures, is_ell_power, is_generator, is_prime,
)

from oracles import naive_ind, naive_is_power, naive_roots, naive_smallest_generator


@pytest.mark.parametrize("q, g", [(7, 3), (13, 2), (31, 3)])
def test_smallest_primitive_root(q, g):
    assert naive_smallest_generator(q) == g
    assert find_smallest_primitive_root(q) == g


def test_smallest_primitive_root_matches_oracle_on_range():
    for q in range(3, 400):
        if is_prime(q):
            assert find_smallest_primitive_root(q) == naive_smallest_generator(q)


@pytest.mark.parametrize("q", [1, 4, 9, 15, 2])
def test_primitive_root_rejects_non_primes(q):
    with pytest.raises(ParameterError):
        find_smallest_primitive_root(q)


@pytest.mark.parametrize("q, g, x, expected", [
    (7, 3, 6, 3), (7, 3, 1, 0), (7, 3, 2, 2), (7, 3, 4, 4), (13, 2, 12, 6),
])
def test_ind_examples(q, g, x, expected):
    assert ind(build_field_ctx(q, g), x) == expected == naive_ind(q, g, x)


def test_ind_zero_is_domain_error():
    ctx = build_field_ctx(7)
    with pytest.raises(DomainError):
        ind(ctx, 0)
    with pytest.raises(DomainError):
        ind(ctx, 14)


def test_invalid_generator_rejected():
    with pytest.raises(ParameterError):
        build_field_ctx(7, 2)  # 2 has order 3 mod 7
    with pytest.raises(ParameterError):
        build_field_ctx(8)


def test_field_cap():
    with pytest.raises(ParameterError):
        build_field_ctx(101, max_q=100)


@pytest.mark.parametrize("q", [7, 13, 31, 61, 211, 1009])
def test_index_table_is_bijection(q):
    ctx = build_field_ctx(q)
    assert ctx.ind(1) == 0
    assert sorted(int(ctx.ind(x)) for x in range(2, q)) == list(range(1, q - 1))
    assert all(pow(ctx.g, ctx.ind(x), q) == x for x in range(1, q))
    assert index_table_failures(ctx) == []


def test_generator_invariants():
    for q in (7, 13, 31, 211):
        ctx = build_field_ctx(q)
        assert is_generator(ctx.g, q)
        assert ctx.ind(q - 1) == ctx.ind_minus_one


@settings(max_examples=200)
@given(st.sampled_from([7, 13, 31, 61, 211, 331]), st.integers(1, 10**6), st.integers(1, 10**6))
def test_ind_additive(q, y, z):
    ctx = build_field_ctx(q)
    y, z = y % (q - 1) + 1, z % (q - 1) + 1
    assert ind(ctx, y * z) % (q - 1) == (ind(ctx, y) + ind(ctx, z)) % (q - 1)


@pytest.mark.parametrize("q, ell, x, expected", [
    (7, 2, 2, True), (7, 3, 2, False), (31, 3, 2, True), (7, 2, 1, True), (31, 5, 1, True),
])
def test_is_ell_power(q, ell, x, expected):
    ctx = build_field_ctx(q)
    assert is_ell_power(ctx, x, ell) is expected
    assert naive_is_power(q, x, ell) is expected


def test_is_ell_power_matches_oracle():
    ctx = build_field_ctx(31)
    for ell in (2, 3, 5):
        for x in range(1, 31):
            assert is_ell_power(ctx, x, ell) == naive_is_power(31, x, ell)


def test_is_ell_power_needs_ell_dividing():
    with pytest.raises(ParameterError):
        is_ell_power(build_field_ctx(7), 2, 5)


def test_param_set_q7():
    p = derive_param_set(build_field_ctx(7, 3), 2, 3)
    assert (p.zeta_lf, p.zeta_l, p.zeta_f, p.xi_l, p.xi_f) == (3, 6, 2, 6, 4)
    assert p.xi_l * p.xi_f % 7 == p.zeta_lf


def test_param_set_q13():
    p = derive_param_set(build_field_ctx(13, 2), 2, 3)
    assert (p.zeta_lf, p.xi_l, p.xi_f) == (4, 12, 9)
    assert pow(p.xi_l, 3, 13) == p.zeta_l
    assert pow(p.xi_f, 3, 13) == 1 and pow(p.xi_f, 2, 13) == p.zeta_f


@pytest.mark.parametrize("ell, f, q", [(2, 3, 7), (3, 2, 31), (3, 5, 31), (5, 3, 61), (7, 2, 29), (3, 7, 43)])
def test_param_set_matches_search(ell, f, q):
    ctx = build_field_ctx(q)
    p = derive_param_set(ctx, ell, f)
    assert (p.zeta_lf, p.xi_l, p.xi_f) == naive_roots(q, ctx.g, ell, f)
    m = (q - 1) // (ell * f)
    assert ctx.ind(p.xi_f) % ell == 0
    assert (ctx.ind(p.xi_l) - m) % ell == 0


@pytest.mark.parametrize("ell, f, q", [(2, 3, 11), (2, 2, 7), (4, 3, 13), (5, 7, 29)])
def test_param_set_errors(ell, f, q):
    with pytest.raises(ParameterError):
        derive_param_set(build_field_ctx(q), ell, f)


@pytest.mark.parametrize("ell, f, q", [(2, 3, 37), (3, 5, 151), (5, 3, 31), (2, 7, 113)])
def test_cyclotomic_product(ell, f, q):
    ctx = build_field_ctx(q)
    p = derive_param_set(ctx, ell, f)
    for r in range(ell):
        for j in range(1, f):
            total = sum(ctx.ind(1 - ctx.pow_g(a)) for a in range(1, q - 1) if a % f == j and a % ell == r)
            target = (1 - pow(p.xi_l, r, q) * pow(p.xi_f, j, q)) % q
            assert (total - ctx.ind(target)) % (q - 1) == 0
    assert index_table_failures(ctx, p) == []


def test_table_is_read_only():
    ctx = build_field_ctx(13)
    with pytest.raises(ValueError):
        ctx.ind_table[2] = 0
    assert isinstance(ctx.ind_table, np.ndarray)
