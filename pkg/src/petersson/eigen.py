"""Degenerate coefficients along E_{k,1} | V_q1 | U_l1 | U*_l2 | V*_q2 and the
eigenvalue scan against (q1 q2)^(k - 5/4).

With m = q1 l1^2 = q2 l2^2 the chain is

    phi1 = E_{k,1} | V_q1          (index q1)
    phi2 = phi1 | U_l1             (index m)
    phi3 = phi2 | U*_l2            (index q2)
    phi4 = phi3 | V*_q2            (index 1)

Each step only reads degenerate coefficients to produce degenerate
coefficients, so the chain runs on degenerate-only expansions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

from .arith import count_sqrt_zero, divisors, rat_str, sigma_pow
from .hecke import apply_U, apply_U_star, apply_V, apply_V_star
from .jacexp import JacExp
from .jacobi import jac_eis_1

__all__ = [
    "chain",
    "chain_full",
    "phi4_proportional",
    "phi_chain_degenerate",
    "phi_chain_closed",
    "factor_pairs",
    "eigen_bound_scan",
    "ScanRow",
    "minimal_index",
    "phi4_bound",
    "ratio_scan",
    "EIGEN_RATIO_CONSTANT",
    "scan_report_json",
]


def _validate(q1: int, l1: int, q2: int, l2: int) -> int:
    m = q1 * l1 * l1
    if m != q2 * l2 * l2:
        raise ValueError(f"q1 l1^2 = {m} but q2 l2^2 = {q2 * l2 * l2}")
    if min(q1, l1, q2, l2) < 1:
        raise ValueError("parameters must be positive")
    return m


def chain(k: int, q1: int, l1: int, q2: int, l2: int) -> tuple[JacExp, JacExp, JacExp, JacExp]:
    """Degenerate-only expansions of phi1..phi4 (all degenerate classes covered)."""
    m = _validate(q1, l1, q2, l2)
    p_m = m // 4 + 1
    e = jac_eis_1(k, q1 * (p_m - 1) + 1, degenerate_only=True)
    phi1 = apply_V(e, q1, prec=p_m, degenerate_only=True)
    phi2 = apply_U(phi1, l1)
    phi3 = apply_U_star(phi2, l2, prec=q2 // 4 + 1, degenerate_only=True)
    phi4 = apply_V_star(phi3, q2, prec=1, degenerate_only=True)
    return phi1, phi2, phi3, phi4


def chain_full(k: int, q1: int, l1: int, q2: int, l2: int, prec: int = 2) -> JacExp:
    """phi4 with every coefficient n < prec, each step sized from the one after it."""
    m = _validate(q1, l1, q2, l2)
    p3 = q2 * (prec - 1) + q2 // 4 + 1
    p2 = p3 + m // 4
    e = jac_eis_1(k, q1 * (p2 - 1) + 1)
    phi1 = apply_V(e, q1, prec=p2)
    phi3 = apply_U_star(apply_U(phi1, l1), l2, prec=p3)
    return apply_V_star(phi3, q2, prec=prec)


def phi4_proportional(k: int, q1: int, l1: int, q2: int, l2: int, prec: int = 2) -> bool:
    """Whether phi4 = c_{phi4}(0,0) E_{k,1} on every stored coefficient."""
    phi4 = chain_full(k, q1, l1, q2, l2, prec)
    return phi4 == jac_eis_1(k, prec).scale(phi4[0, 0])


def _degenerate_value(phi: JacExp, r: int) -> Fraction:
    if (r * r) % (4 * phi.m):
        return Fraction(0)
    return phi.coeff_disc(0, r)


def phi_chain_degenerate(k: int, q1: int, l1: int, q2: int, l2: int, r: int) -> tuple[Fraction, ...]:
    """c_{phi_j}(0, r), j = 1..4, by composing the operators on E_{k,1}."""
    return tuple(_degenerate_value(phi, r) for phi in chain(k, q1, l1, q2, l2))


def phi_chain_closed(k: int, q1: int, l1: int, q2: int, l2: int, r: int) -> tuple[Fraction, ...]:
    """The same four values from the gcd / sigma_{k-1} closed forms.

    A coefficient c(0, r) of index M is read as 0 unless 4M | r^2.
    """
    m = _validate(q1, l1, q2, l2)

    def c1(rho: int) -> Fraction:
        if (rho * rho) % (4 * q1):
            return Fraction(0)
        return Fraction(sigma_pow(k - 1, gcd(gcd(rho * rho // (4 * q1), rho // 2), q1)))

    def c2(rho: int) -> Fraction:
        if (rho * rho) % (4 * m) or rho % (2 * l1):
            return Fraction(0)
        return Fraction(sigma_pow(k - 1, gcd(gcd(rho * rho // (4 * m), rho // (2 * l1)), q1)))

    def c3(rho: int) -> Fraction:
        # r' runs mod 2m over r' = l2 * rho mod 2m / l2
        if (rho * rho) % (4 * q2):
            return Fraction(0)
        return sum((c2(l2 * (rho + 2 * q2 * j)) for j in range(l2)), Fraction(0)) / l2

    total = Fraction(0)
    for x in divisors(q2):
        inner = sum(
            (c3(q2 * s // x) for s in range(2 * x) if (s * s) % (4 * x) == 0),
            Fraction(0),
        )
        total += Fraction(x) ** (k - 2) * inner
    c4 = total if r % 2 == 0 else Fraction(0)
    return c1(r), c2(r), c3(r), c4


def phi4_bound(k: int, q1: int, q2: int) -> Fraction:
    """2 sigma_{k-1}(q1) sum_{x | q2} x^(k-2) #{s mod 2x : s^2 = 0 mod 4x}."""
    return 2 * sigma_pow(k - 1, q1) * sum(
        Fraction(x) ** (k - 2) * count_sqrt_zero(x) for x in divisors(q2)
    )


def factor_pairs(m: int) -> list[tuple[int, int]]:
    """All (q, l) with q l^2 = m."""
    return [(m // (l * l), l) for l in range(1, m + 1) if l * l <= m and m % (l * l) == 0]


@dataclass(frozen=True)
class ScanRow:
    q1: int
    q2: int
    l1: int
    l2: int
    k: int
    value: Fraction

    @property
    def ratio(self) -> float:
        return float(self.value) / float(self.q1 * self.q2) ** (self.k - 1.25)

    def to_dict(self) -> dict:
        return {
            "q1": self.q1,
            "q2": self.q2,
            "l1": self.l1,
            "l2": self.l2,
            "k": self.k,
            "value": rat_str(self.value),
            "ratio": self.ratio,
        }


def eigen_bound_scan(k: int, m_list, q_max: int | None = None) -> list[ScanRow]:
    """c_{phi4}(0,0) for every factorization pair of every m in ``m_list``."""
    rows = []
    for m in sorted(set(m_list)):
        pairs = [(q, l) for q, l in factor_pairs(m) if q_max is None or q <= q_max]
        for q1, l1 in pairs:
            for q2, l2 in pairs:
                phi4 = chain(k, q1, l1, q2, l2)[3]
                rows.append(ScanRow(q1, q2, l1, l2, k, phi4.coeff_disc(0, 0)))
    return rows


def minimal_index(q1: int, q2: int) -> tuple[int, int, int] | None:
    """Smallest m = q1 l1^2 = q2 l2^2, with (l1, l2); None when q1 q2 is not a square."""
    prod = q1 * q2
    if isqrt(prod) ** 2 != prod:
        return None
    m = lcm(q1, q2)
    while not (isqrt(m // q1) ** 2 == m // q1 and m % q1 == 0 and isqrt(m // q2) ** 2 == m // q2 and m % q2 == 0):
        m += lcm(q1, q2)
    return m, isqrt(m // q1), isqrt(m // q2)


# sup of c_{phi4}(0,0) / (q1 q2)^(k - 5/4) over q1, q2 <= 20 at minimal index,
# attained at q1 = q2 = 1 for k in {4, 8, 12}
EIGEN_RATIO_CONSTANT = 1.0


def ratio_scan(k: int, q_max: int = 20) -> list[ScanRow]:
    """c_{phi4}(0,0) at the minimal index for every q1, q2 <= q_max with q1 q2 a square."""
    rows = []
    for q1 in range(1, q_max + 1):
        for q2 in range(1, q_max + 1):
            found = minimal_index(q1, q2)
            if found is None:
                continue
            _, l1, l2 = found
            rows.append(ScanRow(q1, q2, l1, l2, k, chain(k, q1, l1, q2, l2)[3].coeff_disc(0, 0)))
    return rows


def scan_report_json(rows: list[ScanRow]) -> str:
    return json.dumps([r.to_dict() for r in rows], sort_keys=True)
