"""Level-one elliptic modular forms as truncated q-expansions, plus the
arithmetic functions g_f and alpha_m(t; f) attached to a form f.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import bernoulli, divisors, g_k, moebius, rat_str, sigma_pow, square_divisors
from .errors import PrecisionError

__all__ = [
    "QExp",
    "eisenstein_qexp",
    "delta_qexp",
    "cusp_basis",
    "g_f",
    "alpha_m",
]


@dataclass(frozen=True)
class QExp:
    """sum_{n < prec} a(n) q^n of weight ``weight``."""

    weight: int
    coeffs: tuple[Fraction, ...]
    cuspidal: bool = False

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("prec must be >= 1")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.cuspidal and self.coeffs[0] != 0:
            raise ValueError("cuspidal q-expansion with nonzero constant term")

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n >= self.prec:
            raise PrecisionError(f"a({n}) requested, expansion known for n < {self.prec}")
        return self.coeffs[n]

    def truncate(self, prec: int) -> "QExp":
        if prec > self.prec:
            raise PrecisionError(f"cannot extend prec {self.prec} to {prec}")
        return QExp(self.weight, self.coeffs[:prec], self.cuspidal)

    def __add__(self, other: "QExp") -> "QExp":
        if self.weight != other.weight:
            raise ValueError("weights differ")
        n = min(self.prec, other.prec)
        return QExp(
            self.weight,
            tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])),
            self.cuspidal and other.cuspidal,
        )

    def __sub__(self, other: "QExp") -> "QExp":
        return self + other.scale(-1)

    def scale(self, c) -> "QExp":
        c = Fraction(c)
        return QExp(self.weight, tuple(c * a for a in self.coeffs), self.cuspidal or c == 0)

    def __mul__(self, other: "QExp") -> "QExp":
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                for j in range(n - i):
                    out[i + j] += a[i] * b[j]
        return QExp(self.weight + other.weight, tuple(out), self.cuspidal or other.cuspidal)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def to_json(self) -> str:
        return json.dumps(
            {"weight": self.weight, "prec": self.prec, "coeffs": [rat_str(c) for c in self.coeffs]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "QExp":
        d = json.loads(text)
        coeffs = tuple(Fraction(c) for c in d["coeffs"])
        if len(coeffs) != d["prec"]:
            raise ValueError("prec does not match coefficient count")
        return cls(d["weight"], coeffs, cuspidal=coeffs[0] == 0)


def eisenstein_qexp(k: int, prec: int) -> QExp:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    if prec < 1:
        raise ValueError("prec must be >= 1")
    c = Fraction(-2 * k) / bernoulli(k)
    return QExp(k, (Fraction(1),) + tuple(c * sigma_pow(k - 1, n) for n in range(1, prec)))


def delta_qexp(prec: int) -> QExp:
    """Delta = q prod (1 - q^n)^24."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    # prod (1 - q^n) via Euler's pentagonal theorem, then the 24th power
    eta = [0] * prec
    j = 0
    while True:
        hit = False
        for g in ({j * (3 * j - 1) // 2, j * (3 * j + 1) // 2} if j else {0}):
            if g < prec:
                eta[g] += -1 if j % 2 else 1
                hit = True
        if not hit:
            break
        j += 1
    power = [1] + [0] * (prec - 1)
    for _ in range(24):
        power = [sum(power[i] * eta[n - i] for i in range(n + 1)) for n in range(prec)]
    coeffs = [0] + power[: prec - 1]
    return QExp(12, tuple(Fraction(c) for c in coeffs), cuspidal=True)


def cusp_basis(k: int, prec: int) -> list[QExp]:
    """Echelonized (Victor Miller) basis of S_k: f_i = q^i + O(q^(d+1))."""
    if k % 2 or k < 0:
        raise ValueError("k must be even and >= 0")
    dim = k // 12 - (1 if k % 12 == 2 else 0)
    if k < 12 or dim <= 0:
        return []
    if prec <= dim:
        raise PrecisionError(f"prec {prec} too small for a dimension-{dim} basis")
    e4, e6, delta = eisenstein_qexp(4, prec), eisenstein_qexp(6, prec), delta_qexp(prec)
    # Delta^j * E4^a * E6^b, j = 1..dim, weight 12j + 4a + 6b = k with b in {0, 1}
    gens: list[QExp] = []
    for j in range(1, dim + 1):
        rest = k - 12 * j
        b = 1 if rest % 4 else 0
        a = (rest - 6 * b) // 4
        f = delta
        for _ in range(j - 1):
            f = f * delta
        for _ in range(a):
            f = f * e4
        for _ in range(b):
            f = f * e6
        gens.append(f)
    rows = [list(g.coeffs) for g in gens]
    # gens[j] = q^(j+1) + ...; clear the entries above each pivot
    for i in range(dim - 1, -1, -1):
        piv = i + 1
        lead = rows[i][piv]
        rows[i] = [c / lead for c in rows[i]]
        for r in range(i):
            c = rows[r][piv]
            if c:
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[i])]
    return [QExp(k, tuple(r), cuspidal=True) for r in rows]


def g_f(f: QExp, m: int) -> Fraction:
    """sum_{d^2 | m} mu(d) a_f(m / d^2)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m >= f.prec:
        raise PrecisionError(f"g_f({m}) needs a_f({m}), prec is {f.prec}")
    return sum((moebius(d) * f[m // (d * d)] for d in square_divisors(m)), Fraction(0))


def alpha_m(f: QExp, k: int, m: int, t: int) -> Fraction:
    """sum_{l | t} mu(t/l) g_f(m/l^2) / g_k(m/l^2)."""
    if m % (t * t):
        raise ValueError(f"t^2 = {t * t} does not divide m = {m}")
    return sum(
        (moebius(t // l) * g_f(f, m // (l * l)) / g_k(k, m // (l * l)) for l in divisors(t)),
        Fraction(0),
    )
