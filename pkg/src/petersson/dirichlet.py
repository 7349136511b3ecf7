"""Coefficient-level checks of the Dirichlet series attached to the Siegel
Eisenstein series of degree 2.

zeta(s - a) is the coefficient stream n -> n^a, zeta(2s - a) has d^a at
n = d^2, and every identity is an exact Dirichlet convolution.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import ArithSeq, _zeta_shift, dirichlet_mul, divisors, psi_direct, seq_equal, sigma_pow
from .hecke import apply_V, apply_V_star
from .jacobi import jac_eis_1

__all__ = [
    "vnstar_vn_eigen",
    "vnstar_vn_composed",
    "lambda_seq",
    "verify_Z_identity",
    "zarkovskaya_factor",
]


def vnstar_vn_eigen(k: int, N: int, psi_exponent: int | None = None) -> Fraction:
    """lambda_N = sum_{t | N} psi(t) t^(k-2) sigma_{2k-3}(N/t).

    ``psi_exponent`` replaces k - 2 (only to build deliberately wrong variants).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    e = k - 2 if psi_exponent is None else psi_exponent
    return sum((Fraction(psi_direct(t)) * Fraction(t) ** e * sigma_pow(2 * k - 3, N // t) for t in divisors(N)), Fraction(0))


def vnstar_vn_composed(k: int, N: int, prec: int = 3) -> tuple[Fraction, bool]:
    """(c(0,0), proportional) for E_{k,1} | V_N | V*_N on n < prec.

    ``proportional`` tells whether the whole stored expansion is c(0,0) E_{k,1}.
    """
    need_V = N * prec + 1
    e = jac_eis_1(k, N * (need_V - 1) + 1)
    image = apply_V_star(apply_V(e, N, prec=need_V), N, prec=prec)
    lam = image[0, 0]
    return lam, image == e.truncate(prec).scale(lam)


def lambda_seq(k: int, N: int, psi_exponent: int | None = None) -> ArithSeq:
    return ArithSeq.from_function(lambda n: vnstar_vn_eigen(k, n, psi_exponent), N)


def _four_zetas(k: int, N: int) -> ArithSeq:
    """zeta(s) zeta(s-k+1) zeta(s-k+2) zeta(s-2k+3)."""
    out = _zeta_shift(0, N)
    for a in (k - 1, k - 2, 2 * k - 3):
        out = dirichlet_mul(out, _zeta_shift(a, N))
    return out


def _report(k: int, N: int, lhs: ArithSeq, rhs: ArithSeq) -> dict:
    bad = seq_equal(lhs.values, rhs.values)
    report = {"k": k, "N_max": N, "ok": bad is None, "first_mismatch": bad}
    if bad is not None:
        report["lhs"] = str(lhs[bad])
        report["rhs"] = str(rhs[bad])
    return report


def verify_Z_identity(k: int, N_max: int, psi_exponent: int | None = None) -> dict:
    """zeta(2s-2k+4) sum lambda_N N^-s against the four-zeta product, coefficient by coefficient."""
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    if N_max < 1:
        raise ValueError("N_max must be >= 1")
    lhs = dirichlet_mul(_zeta_shift(2 * k - 4, N_max, step=2), lambda_seq(k, N_max, psi_exponent))
    return _report(k, N_max, lhs, _four_zetas(k, N_max))


def zarkovskaya_factor(k: int, N_max: int) -> dict:
    """Z(E_k, s) Z(E_k, s-k+2) against the four-zeta product.

    Z(E_k, s) = zeta(s) zeta(s-k+1) has coefficients sigma_{k-1}(n); the
    shift by k - 2 multiplies them by n^(k-2).
    """
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    if N_max < 1:
        raise ValueError("N_max must be >= 1")
    a = ArithSeq.from_function(lambda n: sigma_pow(k - 1, n), N_max)
    b = ArithSeq.from_function(lambda n: n ** (k - 2) * sigma_pow(k - 1, n), N_max)
    return _report(k, N_max, dirichlet_mul(a, b), _four_zetas(k, N_max))
