from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from petersson.arith import (
    ArithSeq,
    bernoulli,
    cohen_H,
    count_sqrt_zero,
    dirichlet_inverse,
    dirichlet_mul,
    divisors,
    fundamental_split,
    g_k,
    g_k_product,
    gen_bernoulli,
    kronecker,
    moebius,
    parse_rat,
    psi_direct,
    psi_seq,
    rat_str,
    sigma_pow,
    zeta_neg,
)


@pytest.mark.parametrize("n,value", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, 0), (6, Fraction(1, 42)), (12, Fraction(-691, 2730))])
def test_bernoulli(n, value):
    assert bernoulli(n) == value


@pytest.mark.parametrize("k,value", [(2, Fraction(-1, 12)), (4, Fraction(1, 120)), (8, Fraction(1, 240)), (12, Fraction(691, 32760))])
def test_zeta_neg(k, value):
    assert zeta_neg(k) == value


@pytest.mark.parametrize("e,n,value", [(3, 1, 1), (3, 4, 73), (0, 12, 6), (1, 6, 12)])
def test_sigma_pow(e, n, value):
    assert sigma_pow(e, n) == value


@pytest.mark.parametrize("n,value", [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1)])
def test_moebius(n, value):
    assert moebius(n) == value


def test_g_k_examples():
    assert g_k(4, 1) == 1
    assert g_k(4, 4) == 72
    assert g_k(4, 7) == 1 + 7**3


@pytest.mark.parametrize("n,value", [(1, 1), (2, 3), (3, 4), (4, 6), (9, 12)])
def test_psi(n, value):
    assert psi_direct(n) == value
    assert psi_seq(12)[n] == value


@pytest.mark.parametrize("x,value", [(1, 1), (4, 2), (12, 2), (36, 6), (8, 2)])
def test_count_sqrt_zero(x, value):
    assert count_sqrt_zero(x) == value
    assert value == sum(1 for s in range(2 * x) if (s * s) % (4 * x) == 0)


def test_dirichlet_examples():
    ones = ArithSeq.from_function(lambda n: 1, 30)
    mu = ArithSeq.from_function(moebius, 30)
    assert dirichlet_mul(ArithSeq.unit(30), ones) == ones
    assert dirichlet_mul(ones, ones)[6] == 4
    assert dirichlet_mul(mu, ones) == ArithSeq.unit(30)
    assert dirichlet_inverse(ones) == mu
    with pytest.raises(ValueError):
        dirichlet_mul(ones, ArithSeq.unit(5))


def test_kronecker_against_legendre():
    for p in (3, 5, 7, 11, 13):
        for a in range(-20, 20):
            legendre = pow(a % p, (p - 1) // 2, p)
            expected = 0 if a % p == 0 else (1 if legendre == 1 else -1)
            assert kronecker(a, p) == expected


def test_kronecker_even_and_negative():
    assert kronecker(-4, 3) == -1
    assert kronecker(5, 2) == -1  # 5 = 5 mod 8
    assert kronecker(-7, 2) == 1  # -7 = 1 mod 8
    assert kronecker(-1, -1) == -1
    assert kronecker(3, 0) == 0


def test_fundamental_split():
    assert fundamental_split(-3) == (-3, 1)
    assert fundamental_split(-12) == (-3, 2)
    assert fundamental_split(-16) == (-4, 2)
    assert fundamental_split(8) == (8, 1)


def test_gen_bernoulli_trivial_character():
    for n in range(0, 10):
        expected = bernoulli(n) if n != 1 else Fraction(1, 2)
        assert gen_bernoulli(n, 1) == expected


def test_cohen_H_examples():
    assert cohen_H(3, 0) == Fraction(-1, 252)
    assert cohen_H(3, 1) == 0
    assert cohen_H(1, 0) == Fraction(-1, 12)
    # Hurwitz class numbers
    assert cohen_H(1, 3) == Fraction(1, 3)
    assert cohen_H(1, 4) == Fraction(1, 2)
    assert cohen_H(1, 7) == 1
    assert cohen_H(1, 8) == 1
    assert cohen_H(1, 15) == 2


def test_cohen_H_denominator_sanity():
    for r in (3, 5, 7, 11):
        bound = zeta_neg(2 * r).denominator * 12 * r
        for N in range(0, 60):
            assert bound % cohen_H(r, N).denominator == 0


def test_rat_roundtrip():
    for x in (Fraction(3, 7), Fraction(-5), Fraction(0)):
        assert parse_rat(rat_str(x)) == x
    assert rat_str(Fraction(2)) == "2/1"


@given(st.integers(1, 3000))
def test_divisors_property(n):
    ds = divisors(n)
    assert list(ds) == sorted(ds)
    assert all(n % d == 0 for d in ds)
    assert len(ds) == sigma_pow(0, n)


@given(st.sampled_from([4, 8, 12]), st.integers(1, 10**4))
def test_g_k_sum_equals_product(k, m):
    assert g_k(k, m) == g_k_product(k, m)


@given(st.integers(1, 500), st.integers(1, 500))
def test_sigma_multiplicative(a, b):
    from math import gcd

    if gcd(a, b) == 1:
        assert sigma_pow(3, a * b) == sigma_pow(3, a) * sigma_pow(3, b)
