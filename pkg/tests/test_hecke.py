from fractions import Fraction

import pytest

from petersson.arith import count_sqrt_zero, divisors, sigma_pow
from petersson.dirichlet import vnstar_vn_eigen
from petersson.errors import PrecisionError
from petersson.hecke import apply_U, apply_U_star, apply_V, apply_V_star
from petersson.jacexp import JacExp, index_range
from petersson.jacobi import jac_eis_1, jac_eis_m

E12 = jac_eis_1(12, 40)


def test_U_examples():
    assert apply_U(E12, 1) is E12
    u = apply_U(E12, 2)
    assert u.m == 4 and u.prec == E12.prec
    assert u[1, 1] == 0
    assert u[3, 2] == E12[3, 1]


@pytest.mark.parametrize("m,l", [(1, 2), (2, 3), (3, 2), (4, 4), (6, 2)])
def test_U_degenerate_support(m, l):
    phi = apply_U(jac_eis_m(8, m, m * l * l + 1, degenerate_only=True), l)
    for r, value in phi.degenerate().items():
        assert value == (1 if r % (2 * m * l) == 0 else 0)


def test_V_examples():
    assert apply_V(E12, 1) is E12
    for N in (2, 3, 5, 6):
        v = apply_V(E12, N)
        assert v.m == N
        assert v[0, 0] == sigma_pow(11, N)
    assert apply_V(E12, 7)[0, 0] == 1 + 7**11
    with pytest.raises(PrecisionError):
        apply_V(jac_eis_1(12, 3), 2, prec=5)


def test_V_rejects_bad_N():
    with pytest.raises(ValueError):
        apply_V(E12, 0)


def test_U_star_examples():
    assert apply_U_star(E12, 1) is E12
    for l in (2, 3):
        back = apply_U_star(apply_U(E12, l), l)
        assert back[0, 0] == 1
        assert back.equal_on_common_range(E12)


def test_V_star_examples():
    assert apply_V_star(E12, 1) is E12
    with pytest.raises(ValueError):
        apply_V_star(E12, 2)


@pytest.mark.parametrize("N", [2, 3, 4, 6, 8])
def test_V_star_degenerate_slot(N):
    # at D = 0 the s-sum collapses to count_sqrt_zero(d) copies of the degenerate value
    psi = apply_V(jac_eis_1(12, 4 * N), N, prec=4, degenerate_only=True)
    out = apply_V_star(psi, N, prec=1, degenerate_only=True)
    expected = Fraction(0)
    for d in divisors(N):
        q = N // d
        inner = sum(psi.coeff_disc(0, q * s) for s in range(2 * d) if (s * s) % (4 * d) == 0)
        expected += Fraction(d) ** 10 * inner
    assert out[0, 0] == expected
    assert count_sqrt_zero(N) == sum(1 for s in range(2 * N) if (s * s) % (4 * N) == 0)


@pytest.mark.parametrize("N", range(1, 9))
def test_V_star_V_eigenvalue(N):
    e = jac_eis_1(12, N * (3 * N) + 1)
    image = apply_V_star(apply_V(e, N, prec=3 * N + 1), N, prec=3)
    lam = vnstar_vn_eigen(12, N)
    assert image == e.truncate(3).scale(lam)


def test_strict_variant_breaks_eigen_relation():
    N = 2
    e = jac_eis_1(12, 40)
    psi = apply_V(e, N, prec=13)
    strict = apply_V_star(psi, N, prec=3, drop_discriminant=True)
    assert strict != e.truncate(3).scale(vnstar_vn_eigen(12, N))


@pytest.mark.parametrize("a", range(1, 7))
@pytest.mark.parametrize("b", range(1, 7))
def test_U_composition(a, b):
    phi = jac_eis_1(12, 6)
    assert apply_U(apply_U(phi, a), b) == apply_U(phi, a * b)


@pytest.mark.parametrize("l", range(1, 5))
@pytest.mark.parametrize("N", range(1, 5))
def test_U_V_commute(l, N):
    phi = jac_eis_1(12, 4 * 6 + 1)
    lhs = apply_V(apply_U(phi, l), N, prec=6)
    rhs = apply_U(apply_V(phi, N, prec=6), l)
    assert lhs == rhs


def test_adjoint_outputs_are_well_defined():
    # the JacExp constructor enforces the (D, r mod 2m) and r -> -r symmetries
    psi = apply_V(E12, 6, prec=6)
    assert isinstance(apply_V_star(psi, 6, prec=1), JacExp)
    chi = apply_U(jac_eis_m(12, 3, 10), 2)
    assert apply_U_star(chi, 2, prec=6).m == 3


def test_index_range_counts():
    assert list(index_range(1, 2)) == [(0, 0), (1, -2), (1, -1), (1, 0), (1, 1), (1, 2)]
    assert list(index_range(2, 3, degenerate_only=True)) == [(0, 0), (2, -4), (2, 4)]
