from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from petersson.arith import divisors, g_k
from petersson.errors import PrecisionError
from petersson.qexp import QExp, alpha_m, cusp_basis, delta_qexp, eisenstein_qexp, g_f

DELTA = delta_qexp(40)
TAU = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830, 6: -6048, 7: -16744, 11: 534612}


def test_eisenstein_examples():
    assert eisenstein_qexp(4, 2).coeffs == (1, 240)
    assert eisenstein_qexp(6, 2).coeffs == (1, -504)
    assert eisenstein_qexp(12, 1).coeffs == (1,)
    with pytest.raises(ValueError):
        eisenstein_qexp(5, 3)


def test_e4_squared_is_e8():
    e4 = eisenstein_qexp(4, 50)
    assert (e4 * e4).coeffs == eisenstein_qexp(8, 50).coeffs


def test_delta_coefficients():
    assert DELTA[0] == 0
    for n, t in TAU.items():
        assert DELTA[n] == t


def test_delta_from_eisenstein():
    e4, e6 = eisenstein_qexp(4, 20), eisenstein_qexp(6, 20)
    diff = e4 * e4 * e4 - e6 * e6
    assert diff.scale(Fraction(1, 1728)).coeffs == DELTA.truncate(20).coeffs


def test_cusp_basis():
    assert [f.coeffs for f in cusp_basis(12, 10)] == [DELTA.truncate(10).coeffs]
    assert cusp_basis(14, 10) == []
    b24 = cusp_basis(24, 10)
    assert len(b24) == 2
    assert [f.valuation() for f in b24] == [1, 2]
    assert b24[0][2] == 0 and b24[1][1] == 0
    with pytest.raises(PrecisionError):
        cusp_basis(24, 2)


def test_g_f_examples():
    assert g_f(DELTA, 1) == 1
    assert g_f(DELTA, 4) == -1473
    assert g_f(DELTA, 7) == TAU[7]
    with pytest.raises(PrecisionError):
        g_f(DELTA, 40)


def test_alpha_examples():
    assert alpha_m(DELTA, 12, 6, 1) == g_f(DELTA, 6) / g_k(12, 6)
    e4 = eisenstein_qexp(4, 5)
    assert alpha_m(e4, 4, 1, 1) == 240
    assert alpha_m(DELTA, 12, 4, 2) == g_f(DELTA, 1) / g_k(12, 1) - g_f(DELTA, 4) / g_k(12, 4)
    with pytest.raises(ValueError):
        alpha_m(DELTA, 12, 6, 2)


@pytest.mark.parametrize("m", range(1, 40))
def test_alpha_moebius_inversion(m):
    for T in (T for T in divisors(m) if m % (T * T) == 0):
        total = sum(alpha_m(DELTA, 12, m, t) for t in divisors(T))
        assert total == g_f(DELTA, m // (T * T)) / g_k(12, m // (T * T))


def test_json_roundtrip_and_cusp_flag():
    assert QExp.from_json(DELTA.to_json()) == DELTA
    with pytest.raises(ValueError):
        QExp(12, (1, 2), cuspidal=True)
    with pytest.raises(PrecisionError):
        DELTA[40]


@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=12), st.fractions(max_denominator=20))
def test_scale_is_linear(coeffs, c):
    f = QExp(4, tuple(coeffs))
    assert (f + f.scale(c)).coeffs == f.scale(1 + c).coeffs
