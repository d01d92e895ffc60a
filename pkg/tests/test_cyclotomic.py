from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.abc import x as X

from jacobi_valuation.cyclotomic import (
    CycInt, conj, cyclotomic_polynomial, euler_phi, inverse, pi_ell, pi_power_membership, valuation_floor,
)
from jacobi_valuation.errors import DomainError

from oracles import naive_pi_membership


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


@pytest.mark.parametrize("n", range(1, 43))
def test_cyclotomic_polynomial_matches_sympy(n):
    expected = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == expected


def test_cyclotomic_polynomial_domain():
    with pytest.raises(DomainError):
        cyclotomic_polynomial(0)


@pytest.mark.parametrize("n", [6, 10, 14, 15, 21])
def test_phi_vanishes_at_zeta(n):
    assert CycInt.from_poly(n, cyclotomic_polynomial(n)).is_zero()
    assert CycInt.zeta_power(n, n) == 1


def test_multiplication_examples():
    z = CycInt.zeta_power(6, 1)
    assert (z * z).coords == (-1, 1)
    assert z * CycInt.zeta_power(6, 5) == 1
    assert z * 1 == z


def test_conductor_mismatch():
    with pytest.raises(DomainError):
        CycInt.zeta_power(6, 1) * CycInt.zeta_power(10, 1)
    with pytest.raises(DomainError):
        CycInt.zeta_power(6, 1) + CycInt.zeta_power(10, 1)


def test_conj_examples():
    assert conj(CycInt.const(6, 1)) == 1
    assert conj(CycInt.zeta_power(6, 1)).coords == (1, -1)


def cyc(n):
    return st.lists(st.integers(-20, 20), min_size=euler_phi(n), max_size=euler_phi(n)).map(
        lambda c: CycInt(n, tuple(c)))


CONDUCTORS = [6, 10, 14, 15, 21]


@settings(max_examples=60)
@given(st.sampled_from(CONDUCTORS).flatmap(lambda n: st.tuples(cyc(n), cyc(n), cyc(n))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    assert conj(conj(a)) == a
    assert conj(a * b) == conj(a) * conj(b)


@settings(max_examples=40)
@given(st.sampled_from(CONDUCTORS).flatmap(cyc))
def test_inverse(a):
    if a.is_zero():
        return
    assert a * inverse(a.as_rational()) == 1


@settings(max_examples=40)
@given(st.sampled_from(CONDUCTORS).flatmap(lambda n: st.tuples(cyc(n), cyc(n))))
def test_mul_matches_sympy(pair):
    a, b = pair
    n = a.n
    pa = sum(c * X ** i for i, c in enumerate(a.coords))
    pb = sum(c * X ** i for i, c in enumerate(b.coords))
    rem = sympy.Poly(sympy.expand(pa * pb), X).rem(sympy.Poly(sympy.cyclotomic_poly(n, X), X))
    coeffs = rem.all_coeffs()[::-1]
    assert list((a * b).coords) == coeffs + [0] * (euler_phi(n) - len(coeffs))


def test_membership_examples():
    a = CycInt(6, (2, 2))
    assert pi_power_membership(CycInt.zero(6), 2, 3, 7)
    assert pi_power_membership(a, 2, 3, 1)
    assert not pi_power_membership(a, 2, 3, 2)
    assert pi_power_membership(a, 2, 3, 0)


def test_membership_errors():
    with pytest.raises(DomainError):
        pi_power_membership(CycInt.const(6, 1), 2, 3, -1)
    with pytest.raises(DomainError):
        pi_power_membership(CycInt.const(10, 1), 2, 3, 1)


def test_valuation_floor_examples():
    assert valuation_floor(CycInt.zero(6), 2, 3, 5) == 5
    assert valuation_floor(CycInt(6, (2, 2)), 2, 3, 2) == 1
    assert valuation_floor(CycInt.const(6, 4), 2, 3, 2) == 2
    assert valuation_floor(CycInt.const(6, 3), 2, 3, 2) == 0


@pytest.mark.parametrize("ell, f", [(2, 3), (3, 2), (2, 5), (5, 2), (3, 5), (5, 3), (2, 7), (7, 2), (3, 7)])
def test_ell_is_pi_to_the_ell_minus_one(ell, f):
    n = ell * f
    assert pi_power_membership(CycInt.const(n, ell), ell, f, ell - 1)
    assert not pi_power_membership(CycInt.const(n, ell), ell, f, ell)
    assert valuation_floor(CycInt.const(n, ell), ell, f, 3 * ell) == ell - 1
    assert valuation_floor(pi_ell(ell, f), ell, f, 5) == 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (5, 2), (3, 5)]).flatmap(
    lambda lf: st.tuples(st.just(lf), cyc(lf[0] * lf[1]), st.integers(0, 5))))
def test_membership_matches_sympy_and_is_monotone(args):
    (ell, f), a, k = args
    expr = sum(c * X ** i for i, c in enumerate(a.coords))
    got = pi_power_membership(a, ell, f, k)
    assert got == naive_pi_membership(expr, ell, f, k)
    if got:
        assert all(pi_power_membership(a, ell, f, j) for j in range(k))
    # multiplying by pi raises the floor by exactly one
    floor = valuation_floor(a, ell, f, 8)
    if not a.is_zero() and floor < 7:
        assert valuation_floor(a * pi_ell(ell, f), ell, f, 8) == floor + 1


def test_rational_coordinates():
    half = CycInt(6, (Fraction(1, 2), Fraction(0)))
    assert not half.is_integral()
    with pytest.raises(DomainError):
        half.as_integer()
    assert (half * 2).as_integer() == 1


def test_str():
    assert str(CycInt(6, (1, 2))) == "1 + 2*z"
    assert str(CycInt.zero(6)) == "0"
