"""Eisenstein part of the Fourier-Jacobi coefficients of a Klingen Eisenstein series.

For a cusp form f of weight k the index-m Eisenstein part is computed three
independent ways (from E_{k,m}, from the squarefree split m = a b^2, and
from the Siegel Fourier-Jacobi coefficients e_{k,m}), plus its degenerate
profile and the main term of the coefficient asymptotic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arith import divisors, moebius, square_divisors
from .errors import PrecisionError
from .hecke import apply_U
from .jacexp import JacExp, tabulate
from .jacobi import c_k, eis_degenerate, jac_eis_m, siegel_fj, squarefree_split
from .lattice import BinQF, a2k
from .qexp import QExp, alpha_m, g_f

__all__ = [
    "script_E_via_E2e",
    "script_E_via_ekmfor",
    "script_E_via_e2E",
    "ROUTES",
    "degenerate_law",
    "genasy_main_term",
    "route_json",
]


def _check_form(f: QExp, m: int) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    if f.coeffs[0] != 0:
        raise ValueError("f must be a cusp form")
    if f.prec <= m:
        raise PrecisionError(f"f needs coefficients up to q^{m}, has prec {f.prec}")
    return f.weight


def _sum(k: int, m: int, prec: int, pieces) -> JacExp:
    total = tabulate(k, m, prec, lambda n, r: Fraction(0))
    for c, phi in pieces:
        if c:
            total = total + phi.scale(c)
    return total


def script_E_via_E2e(f: QExp, m: int, prec: int) -> JacExp:
    """sum_{t^2 | m} g_f(m/t^2) E_{k,m/t^2} | U_t."""
    k = _check_form(f, m)
    return _sum(
        k,
        m,
        prec,
        ((g_f(f, m // (t * t)), apply_U(jac_eis_m(k, m // (t * t), prec), t)) for t in square_divisors(m)),
    )


def script_E_via_ekmfor(f: QExp, m: int, prec: int) -> JacExp:
    """m = a b^2:  sum_{l | b} a_f(a l^2) sum_{d l | b} mu(d) E_{k, a l^2 d^2} | U_{b/(l d)}."""
    k = _check_form(f, m)
    a, b = squarefree_split(m)

    def pieces():
        for lam in divisors(b):
            coeff = f[a * lam * lam]
            if not coeff:
                continue
            for d in divisors(b // lam):
                mu = moebius(d)
                if mu:
                    yield coeff * mu, apply_U(jac_eis_m(k, a * (lam * d) ** 2, prec), b // (lam * d))

    return _sum(k, m, prec, pieces())


def script_E_via_e2E(f: QExp, m: int, prec: int) -> JacExp:
    """c_k^-1 sum_{t^2 | m} alpha_m(t; f) e_{k,m/t^2} | U_t."""
    k = _check_form(f, m)
    inv = 1 / c_k(k)
    return _sum(
        k,
        m,
        prec,
        ((inv * alpha_m(f, k, m, t), apply_U(siegel_fj(k, m // (t * t), prec), t)) for t in square_divisors(m)),
    )


ROUTES = {
    "E2e": script_E_via_E2e,
    "ekmfor": script_E_via_ekmfor,
    "e2E": script_E_via_e2E,
}


def degenerate_law(f: QExp, m: int, r: int) -> Fraction:
    """sum_{s=1}^{b} a_f(a (s, b)^2) eps_{m,s}(r) for m = a b^2 (needs 4m | r^2)."""
    from math import gcd

    if (r * r) % (4 * m):
        raise ValueError(f"r = {r} is not degenerate for index {m}")
    a, b = squarefree_split(m)
    return sum((f[a * gcd(s, b) ** 2] * eis_degenerate(f.weight, m, s, r) for s in range(1, b + 1)), Fraction(0))


def genasy_main_term(phiF: QExp, T: BinQF, k: int) -> Fraction:
    """c_k^-1 sum_{t^2 | m, t | r} alpha_m(t; phiF) a_2^k(n, r/t, m/t^2).

    Terms with t not dividing r vanish, matching the support of U_t.
    """
    if not T.positive:
        raise ValueError(f"{T} is not positive definite")
    if phiF.prec <= T.m:
        raise PrecisionError(f"phiF needs coefficients up to q^{T.m}, has prec {phiF.prec}")
    total = Fraction(0)
    for t in square_divisors(T.m):
        if T.r % t:
            continue
        total += alpha_m(phiF, k, T.m, t) * a2k(BinQF(T.n, T.r // t, T.m // (t * t)), k)
    return total / c_k(k)


def route_json(phi: JacExp, route: str) -> str:
    d = phi.to_dict()
    d["route"] = route
    return json.dumps(d, sort_keys=True)
