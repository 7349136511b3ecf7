"""Invariants checked on randomly drawn inputs."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from petersson.arith import ArithSeq, dirichlet_inverse, dirichlet_mul, sigma_pow
from petersson.dirichlet import vnstar_vn_eigen
from petersson.hecke import apply_U, apply_U_star, apply_V, apply_V_star
from petersson.jacexp import JacExp, theta_decompose, theta_reassemble
from petersson.jacobi import eis_from_siegel_fj, jac_eis_1, jac_eis_m
from petersson.lattice import BinQF, _divide, a2k, a2k_primitive, gl2_divisors, reduce

weights = st.sampled_from([4, 6, 8, 10, 12])


def _symmetric(phi: JacExp) -> bool:
    """c(n, r) = c(n, -r) = c(n + r s + m s^2, r + 2 m s) wherever both sides are stored."""
    m = phi.m
    for (n, r), v in phi.items():
        if phi[n, -r] != v:
            return False
        for s in (-1, 1):
            n2, r2 = n + r * s + m * s * s, r + 2 * m * s
            if n2 < phi.prec and abs(r2) <= 2 * m * n2 and phi[n2, r2] != v:
                return False
    return True


@given(weights, st.integers(1, 3), st.integers(1, 3))
def test_U_output_invariants(k, m, l):
    out = apply_U(jac_eis_m(k, m, m * l * l // 4 + 3), l)
    assert out.m == m * l * l and _symmetric(out)
    assert apply_U_star(out, l, prec=2).m == m


@given(weights, st.integers(1, 3), st.integers(1, 4))
def test_V_output_invariants(k, m, N):
    out = apply_V(jac_eis_m(k, m, 2 * N + 1), N, prec=3)
    assert out.m == m * N and _symmetric(out)


@given(weights, st.integers(1, 4))
def test_V_constant_term(k, N):
    assert apply_V(jac_eis_1(k, N + 1), N, prec=2)[0, 0] == sigma_pow(k - 1, N)


@given(weights, st.integers(1, 5), st.integers(1, 5))
@settings(max_examples=25)
def test_U_composition(k, a, b):
    phi = jac_eis_1(k, 3)
    assert apply_U(apply_U(phi, a), b) == apply_U(phi, a * b)


@given(st.sampled_from([8, 12]), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=20)
def test_U_V_commute(k, l, N):
    phi = jac_eis_1(k, 3 * N + 1)
    assert apply_V(apply_U(phi, l), N, prec=3) == apply_U(apply_V(phi, N, prec=3), l)


@given(weights, st.integers(1, 5))
@settings(max_examples=20)
def test_V_star_V_is_scalar(k, N):
    e = jac_eis_1(k, 2 * N * N + 1)
    image = apply_V_star(apply_V(e, N, prec=2 * N + 1), N, prec=2)
    assert image == e.truncate(2).scale(vnstar_vn_eigen(k, N))


@given(weights, st.integers(1, 4))
def test_theta_round_trip(k, m):
    phi = jac_eis_m(k, m, 3)
    assert theta_reassemble(theta_decompose(phi)) == phi
    assert JacExp.from_json(phi.to_json()) == phi


@given(st.sampled_from([4, 12]), st.integers(1, 12))
@settings(max_examples=24)
def test_fourier_jacobi_inverse_is_identity(k, m):
    assert eis_from_siegel_fj(k, m, 3) == jac_eis_m(k, m, 3)


forms = st.tuples(st.integers(1, 12), st.integers(-12, 12), st.integers(1, 12)).filter(lambda t: 4 * t[0] * t[2] > t[1] ** 2)


@given(forms)
@settings(max_examples=40)
def test_primitive_parts_sum_back(nrm):
    T = BinQF(*nrm)
    assert sum(a2k_primitive(_divide(T, G), 8) for G in gl2_divisors(T)) == a2k(T, 8)


@given(forms, st.sampled_from([4, 8, 12]))
def test_a2k_depends_on_class_only(nrm, k):
    T = BinQF(*nrm)
    assert a2k(T, k) == a2k(reduce(T)[0], k)


@given(st.lists(st.integers(-5, 5), min_size=24, max_size=24), st.lists(st.integers(-5, 5), min_size=24, max_size=24))
def test_dirichlet_ring(xs, ys):
    a = ArithSeq(tuple(Fraction(x) for x in [1] + xs[1:]))
    b = ArithSeq(tuple(Fraction(y) for y in ys))
    assert dirichlet_mul(a, b) == dirichlet_mul(b, a)
    assert dirichlet_mul(dirichlet_mul(a, dirichlet_inverse(a)), b) == b
