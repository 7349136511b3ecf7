from fractions import Fraction

import pytest

from petersson.jacobi import c_k, jac_eis_1, jac_eis_m, squarefree_split
from petersson.hecke import apply_U
from petersson.jacobi import eis_degenerate
from petersson.klingen import (
    ROUTES,
    degenerate_law,
    genasy_main_term,
    route_json,
    script_E_via_E2e,
    script_E_via_e2E,
    script_E_via_ekmfor,
)
from petersson.errors import PrecisionError
from petersson.lattice import BinQF, a2k, rep_number
from petersson.qexp import QExp, delta_qexp, eisenstein_qexp

DELTA = delta_qexp(30)


def test_index_one():
    for build in ROUTES.values():
        assert build(DELTA, 1, 6) == jac_eis_1(12, 6)


def test_squarefree_index():
    for m in (2, 3, 5, 6, 7, 10):
        assert script_E_via_ekmfor(DELTA, m, 5) == jac_eis_m(12, m, 5).scale(DELTA[m])


def test_index_four_combination():
    expected = jac_eis_m(12, 4, 6).scale(DELTA[4] - 1) + apply_U(jac_eis_1(12, 6), 2)
    assert script_E_via_E2e(DELTA, 4, 6) == expected


@pytest.mark.parametrize("m", [4, 9, 12])
def test_routes_agree(m):
    a, b, c = (build(DELTA, m, 8) for build in ROUTES.values())
    assert a == b == c


def test_zero_form():
    zero = QExp(12, (0,) * 10, cuspidal=True)
    assert script_E_via_e2E(zero, 4, 5).is_zero()


def test_rejects_non_cusp_and_short_forms():
    with pytest.raises(ValueError):
        script_E_via_E2e(eisenstein_qexp(12, 10), 2, 4)
    with pytest.raises(PrecisionError):
        script_E_via_E2e(delta_qexp(3), 5, 4)


@pytest.mark.parametrize("m", [4, 8, 9, 12, 18])
def test_degenerate_law(m):
    phi = script_E_via_E2e(DELTA, m, m + 1)
    for r in range(2 * m):
        if (r * r) % (4 * m) == 0:
            assert phi[r * r // (4 * m), r] == degenerate_law(DELTA, m, r)
    with pytest.raises(ValueError):
        degenerate_law(DELTA, m, 1)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("l", range(1, 5))
def test_degenerate_values_of_U(m, l):
    """Degenerate values of E_{k,m} | U_l against the sum of eps_{m l^2, s} over s = b, 2b, ..., b l."""
    M = m * l * l
    phi = apply_U(jac_eis_m(12, m, M + 1, degenerate_only=True), l)
    _, b = squarefree_split(m)
    for r, value in phi.degenerate().items():
        assert value == sum(eis_degenerate(12, M, s, r) for s in range(b, b * l + 1, b))
        assert value == (1 if r % (2 * m * l) == 0 else 0)


def test_genasy_weight_four():
    e4 = eisenstein_qexp(4, 10)
    T = BinQF(1, 1, 1)
    assert genasy_main_term(e4, T, 4) == a2k(T, 4) == rep_number("E8", T)
    for T in (BinQF(2, 0, 1), BinQF(2, 2, 2), BinQF(3, 1, 2), BinQF(4, 4, 4)):
        assert genasy_main_term(e4, T, 4) == rep_number("E8", T)
    assert c_k(4) ** -1 == Fraction(1, 240)


def test_route_json():
    text = route_json(jac_eis_1(12, 2), "E2e")
    assert '"route": "E2e"' in text
