"""Jacobi Eisenstein series E_{k,1}, E_{k,m} and the Fourier-Jacobi
coefficients e_{k,m} of the degree-2 Siegel Eisenstein series.

Normalizations: E_{k,m} has c(0, 0) = 1; the Siegel series has constant
term 1, so e_{k,1} = c_k E_{k,1} with c_k = 2 / zeta(1 - k).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import cohen_H, factor, g_k, moebius, square_divisors, zeta_neg
from .hecke import apply_U, apply_V
from .jacexp import JacExp, tabulate

__all__ = [
    "c_k",
    "squarefree_split",
    "jac_eis_1",
    "jac_eis_m",
    "eis_degenerate",
    "siegel_fj",
    "eis_from_siegel_fj",
]


def _check_weight(k: int) -> None:
    if k < 4 or k % 2:
        raise ValueError(f"weight must be even and >= 4, got {k}")


def c_k(k: int) -> Fraction:
    """2 / zeta(1 - k): the first Fourier coefficient of the normalized E_k."""
    return 2 / zeta_neg(k)


def squarefree_split(m: int) -> tuple[int, int]:
    """m = a b^2 with a squarefree."""
    a = b = 1
    for p, e in factor(m):
        a *= p ** (e % 2)
        b *= p ** (e // 2)
    return a, b


@lru_cache(maxsize=64)
def jac_eis_1(k: int, prec: int, degenerate_only: bool = False) -> JacExp:
    """E_{k,1}: c(n, r) = H(k-1, 4n - r^2) / H(k-1, 0)."""
    _check_weight(k)
    h0 = cohen_H(k - 1, 0)
    return tabulate(k, 1, prec, lambda n, r: cohen_H(k - 1, 4 * n - r * r) / h0, degenerate_only)


def _combination(k: int, m: int, prec: int, terms, degenerate_only: bool) -> JacExp:
    """sum c * (E_{k,1} | V_N | U_t) over (c, N, t) with N t^2 = m."""
    terms = [(Fraction(c), N, t) for c, N, t in terms if c]
    need = max((N * (prec - 1) + 1 for _, N, _ in terms), default=1)
    e1 = jac_eis_1(k, need, degenerate_only)
    total = None
    for c, N, t in terms:
        piece = apply_U(apply_V(e1, N, prec=prec, degenerate_only=degenerate_only), t).scale(c)
        total = piece if total is None else total + piece
    if total is None:
        return tabulate(k, m, prec, lambda n, r: Fraction(0), degenerate_only)
    return total


@lru_cache(maxsize=256)
def jac_eis_m(k: int, m: int, prec: int, degenerate_only: bool = False) -> JacExp:
    """E_{k,m} = g_k(m)^-1 sum_{t^2 | m} mu(t) E_{k,1} | U_t V_{m/t^2}."""
    _check_weight(k)
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return jac_eis_1(k, prec, degenerate_only)
    inv = 1 / g_k(k, m)
    terms = [(moebius(t) * inv, m // (t * t), t) for t in square_divisors(m)]
    return _combination(k, m, prec, terms, degenerate_only)


def eis_degenerate(k: int, m: int, s: int, r: int) -> Fraction:
    """Degenerate coefficient epsilon_{m,s}(r) of E_{k,m,s} (independent of k)."""
    a, b = squarefree_split(m)
    target = 2 * a * b * s
    if (r - target) % (2 * m) and (r + target) % (2 * m):
        return Fraction(0)
    return Fraction(1) if (2 * s) % b == 0 else Fraction(1, 2)


@lru_cache(maxsize=256)
def siegel_fj(k: int, m: int, prec: int, degenerate_only: bool = False) -> JacExp:
    """e_{k,m} = c_k sum_{d^2 | m} g_k(m/d^2) E_{k,m/d^2} | U_d."""
    _check_weight(k)
    if m < 1:
        raise ValueError("m must be >= 1")
    total = None
    for d in square_divisors(m):
        M = m // (d * d)
        piece = apply_U(jac_eis_m(k, M, prec, degenerate_only), d).scale(g_k(k, M))
        total = piece if total is None else total + piece
    return total.scale(c_k(k))


def eis_from_siegel_fj(k: int, m: int, prec: int, degenerate_only: bool = False) -> JacExp:
    """Inverse relation E_{k,m} = c_k^-1 g_k(m)^-1 sum_{d^2 | m} mu(d) e_{k,m/d^2} | U_d."""
    total = None
    for d in square_divisors(m):
        mu = moebius(d)
        if not mu:
            continue
        piece = apply_U(siegel_fj(k, m // (d * d), prec, degenerate_only), d).scale(mu)
        total = piece if total is None else total + piece
    return total.scale(1 / (c_k(k) * g_k(k, m)))
