"""Index-changing Hecke operators U_l, V_N on Jacobi expansions and their adjoints.

Coefficient rules (index m, D = 4mn - r^2):

* ``phi | U_l``   (index m l^2):  c'(n, r) = c(n, r/l), zero unless l | r.
* ``phi | V_N``   (index m -> m N): c'(n, r) = sum_{d | (n, r, N)} d^(k-1) c(nN/d^2, r/d).
* ``psi | U*_l``  (index m l^2 -> m):
  c'(D, r) = l^-1 sum_{r' mod 2ml, r' = r mod 2m} c_psi(l^2 D, l r').
* ``psi | V*_N``  (index N -> 1):
  c'(D, r) = sum_{d | N} d^(k-2) sum_{s mod 2d, s^2 = -D mod 4d} c_psi(D N^2/d^2, N s/d).
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd

from .arith import divisors
from .errors import PrecisionError
from .jacexp import JacExp, index_range

__all__ = ["apply_U", "apply_V", "apply_U_star", "apply_V_star"]


def _largest_below(x: Fraction) -> int:
    return ceil(x) - 1


def _check_prec(prec: int | None, safe: int, name: str) -> int:
    if prec is None:
        if safe < 1:
            raise PrecisionError(f"{name}: input expansion too short for any output")
        return safe
    if prec < 1:
        raise ValueError("prec must be >= 1")
    return prec


def apply_U(phi: JacExp, l: int) -> JacExp:
    if l < 1:
        raise ValueError("l must be >= 1")
    if l == 1:
        return phi
    m = phi.m * l * l
    tab = {}
    for n, r in index_range(m, phi.prec, phi.partial):
        tab[(n, r)] = phi[n, r // l] if r % l == 0 else Fraction(0)
    return JacExp(phi.k, m, phi.prec, tab, partial=phi.partial)


def apply_V(phi: JacExp, N: int, prec: int | None = None, degenerate_only: bool = False) -> JacExp:
    """phi | V_N, index m -> m N: c'(n, r) = sum_{d | (n, r, N)} d^(k-1) c(n N / d^2, r / d).

    The default output prec is the largest safe one.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    only = degenerate_only or phi.partial
    if N == 1 and prec is None and (phi.partial or not only):
        return phi
    prec = _check_prec(prec, (phi.prec - 1) // N + 1, "apply_V")
    k = phi.k
    tab = {}
    for n, r in index_range(phi.m * N, prec, only):
        g = gcd(gcd(n, r), N)
        tab[(n, r)] = sum(
            (Fraction(d) ** (k - 1) * phi[n * N // (d * d), r // d] for d in divisors(g)),
            Fraction(0),
        )
    return JacExp(k, phi.m * N, prec, tab, partial=only)


def apply_U_star(psi: JacExp, l: int, prec: int | None = None, degenerate_only: bool = False) -> JacExp:
    """Adjoint of U_l: index m l^2 -> m."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if psi.m % (l * l):
        raise ValueError(f"index {psi.m} is not divisible by l^2 = {l * l}")
    only = degenerate_only or psi.partial
    if l == 1 and prec is None and (psi.partial or not only):
        return psi
    m = psi.m // (l * l)
    # reads land on classes with n0 <= (prec - 1) + psi.m / 4
    safe = _largest_below(psi.prec + 1 - Fraction(psi.m, 4))
    prec = _check_prec(prec, safe, "apply_U_star")
    tab = {}
    for n, r in index_range(m, prec, only):
        D = 4 * m * n - r * r
        total = Fraction(0)
        for j in range(l):
            rr = r + 2 * m * j
            total += psi.coeff_disc(l * l * D, l * rr)
        tab[(n, r)] = total / l
    return JacExp(psi.k, m, prec, tab, partial=only)


def apply_V_star(
    psi: JacExp,
    N: int,
    prec: int | None = None,
    degenerate_only: bool = False,
    drop_discriminant: bool = False,
) -> JacExp:
    """Adjoint of V_N: index N -> 1.

    ``drop_discriminant`` reads c_psi(N^2/d^2, N s/d) with the discriminant dropped,
    kept only to compare against the D-dependent rule.
    """
    if psi.m != N:
        raise ValueError(f"expansion has index {psi.m}, expected {N}")
    only = degenerate_only or psi.partial
    if N == 1 and prec is None and (psi.partial or not only):
        return psi
    k = psi.k
    # worst read: n0 <= N (prec - 1) + N / 4
    safe = _largest_below(1 + (psi.prec - Fraction(N, 4)) / N)
    prec = _check_prec(prec, safe, "apply_V_star")
    tab = {}
    cache: dict[int, Fraction] = {}
    for n, r in index_range(1, prec, only):
        D = 4 * n - r * r
        if D not in cache:
            total = Fraction(0)
            for d in divisors(N):
                inner = Fraction(0)
                for s in range(2 * d):
                    if (s * s + D) % (4 * d):
                        continue
                    q = N // d
                    if drop_discriminant:
                        Dp, rp = q * q, N * s // d
                        if (Dp + rp * rp) % (4 * N):
                            continue
                        inner += psi.coeff_disc(Dp, rp)
                    else:
                        inner += psi.coeff_disc(D * q * q, q * s)
                total += Fraction(d) ** (k - 2) * inner
            cache[D] = total
        tab[(n, r)] = cache[D]
    return JacExp(k, 1, prec, tab, partial=only)
