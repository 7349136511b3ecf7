from fractions import Fraction

import pytest

from petersson.arith import cohen_H, g_k, sigma_pow
from petersson.jacexp import is_cuspidal
from petersson.jacobi import (
    c_k,
    eis_degenerate,
    eis_from_siegel_fj,
    jac_eis_1,
    jac_eis_m,
    siegel_fj,
    squarefree_split,
)
from petersson.klingen import script_E_via_E2e
from petersson.lattice import BinQF, a2k, reduce
from petersson.qexp import delta_qexp


def test_c_k():
    assert c_k(4) == 240
    assert c_k(12) == Fraction(65520, 691)
    with pytest.raises(ValueError):
        c_k(5)


def test_squarefree_split():
    assert squarefree_split(12) == (3, 2)
    assert squarefree_split(9) == (1, 3)
    assert squarefree_split(7) == (7, 1)


def test_e41_and_e61_known_values():
    e4 = jac_eis_1(4, 3)
    assert (e4[0, 0], e4[1, 1], e4[1, 0], e4[1, 2]) == (1, 56, 126, 1)
    assert e4[1, 0] == cohen_H(3, 4) / cohen_H(3, 0)
    e6 = jac_eis_1(6, 3)
    assert (e6[1, 1], e6[1, 0]) == (-88, -330)


def test_jac_eis_m_small_cases():
    assert jac_eis_m(4, 1, 4) == jac_eis_1(4, 4)
    for p in (2, 3, 5):
        assert jac_eis_m(8, p, 3)[0, 0] == 1
        assert g_k(8, p) == sigma_pow(7, p)
    with pytest.raises(ValueError):
        jac_eis_m(4, 0, 3)


@pytest.mark.parametrize("m", range(1, 17))
def test_jac_eis_m_degenerate_profile(m):
    phi = jac_eis_m(12, m, m + 1, degenerate_only=True)
    for r, value in phi.degenerate().items():
        assert value == eis_degenerate(12, m, 0, r)
        assert value == (1 if r % (2 * m) == 0 else 0)


def test_eis_degenerate_examples():
    assert eis_degenerate(12, 4, 1, 4) == 1
    assert eis_degenerate(12, 9, 1, 6) == Fraction(1, 2)
    assert eis_degenerate(12, 5, 0, 1) == 0


def test_siegel_fj_index_one():
    assert siegel_fj(4, 1, 5) == jac_eis_1(4, 5).scale(240)
    # 240 roots, each with 56 roots at inner product 1
    assert siegel_fj(4, 1, 3)[1, 1] == 240 * 56


@pytest.mark.parametrize("k", [4, 12])
@pytest.mark.parametrize("m", range(1, 13))
def test_hayashida_roundtrip(k, m):
    assert eis_from_siegel_fj(k, m, 4) == jac_eis_m(k, m, 4)


def test_siegel_fj_is_a_class_function():
    for m in range(1, 6):
        e = siegel_fj(8, m, 12)
        for n in range(12):
            for r in range(-2 * m, 2 * m + 1):
                T = BinQF(n, r, m) if 4 * n * m > r * r else None
                if T is None or T.det2 > 100:
                    continue
                red = reduce(T)[0]
                assert e[n, r] == siegel_fj(8, red.m, red.n + 1)[red.n, red.r] == a2k(T, 8)


def test_is_cuspidal_on_eisenstein_part():
    delta = delta_qexp(5)
    assert not is_cuspidal(script_E_via_E2e(delta, 1, 3))
