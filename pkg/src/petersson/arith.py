"""Exact arithmetic: Bernoulli numbers, zeta at negative integers, divisor
functions, Dirichlet convolution and Cohen's generalized class numbers.

Every scalar is a :class:`fractions.Fraction` or a Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from sympy import factorint

__all__ = [
    "ArithSeq",
    "bernoulli",
    "zeta_neg",
    "factor",
    "divisors",
    "sigma_pow",
    "moebius",
    "g_k",
    "g_k_product",
    "square_divisors",
    "psi_seq",
    "psi_direct",
    "count_sqrt_zero",
    "dirichlet_mul",
    "dirichlet_inverse",
    "kronecker",
    "fundamental_split",
    "gen_bernoulli",
    "cohen_H",
]

# Memo tables. Readers either miss or see a finished value; a duplicated
# computation under concurrency only rewrites an identical entry.
_BERNOULLI: dict[int, Fraction] = {0: Fraction(1), 1: Fraction(-1, 2)}
_COHEN_H: dict[tuple[int, int], Fraction] = {}


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    try:
        return _BERNOULLI[n]
    except KeyError:
        pass
    if n % 2 == 1:
        return Fraction(0)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, run over the even indices only
    top = max(j for j in _BERNOULLI if j % 2 == 0)
    for m in range(top + 2, n + 1, 2):
        s = Fraction(m + 1) * _BERNOULLI[1]
        for j in range(0, m, 2):
            s += comb(m + 1, j) * _BERNOULLI[j]
        _BERNOULLI[m] = -s / (m + 1)
    return _BERNOULLI[n]


def zeta_neg(k: int) -> Fraction:
    """zeta(1 - k) = -B_k / k for even k >= 2."""
    if k < 2 or k % 2:
        raise ValueError("k must be even and >= 2")
    return -bernoulli(k) / k


@lru_cache(maxsize=65536)
def factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| as sorted (p, e) pairs; factor(1) == ()."""
    if n == 0:
        raise ValueError("cannot factor 0")
    return tuple(sorted(factorint(abs(n)).items()))


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factor(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def sigma_pow(e: int, n: int) -> int:
    """sum_{d | n} d^e."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1
    for p, a in factor(n):
        out *= sum(p ** (e * i) for i in range(a + 1))
    return out


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    f = factor(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def square_divisors(m: int) -> list[int]:
    """All y >= 1 with y^2 | m."""
    out = [1]
    for p, e in factor(m):
        out = [y * p**i for y in out for i in range(e // 2 + 1)]
    return sorted(out)


def g_k(k: int, m: int) -> Fraction:
    """sum_{y^2 | m} mu(y) sigma_{k-1}(m / y^2)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Fraction(sum(moebius(y) * sigma_pow(k - 1, m // (y * y)) for y in square_divisors(m)))


def g_k_product(k: int, m: int) -> Fraction:
    """Euler-product form m^(k-1) prod_{p | m} (1 + p^(1-k)) of g_k(m)."""
    out = Fraction(m) ** (k - 1)
    for p, _ in factor(m):
        out *= 1 + Fraction(1, p ** (k - 1))
    return out


@dataclass(frozen=True)
class ArithSeq:
    """Arithmetic function on 1..N, stored densely; ``seq[n]`` is 1-indexed."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("ArithSeq needs at least the index-1 entry")

    @classmethod
    def from_function(cls, f: Callable[[int], object], length: int) -> "ArithSeq":
        return cls(tuple(Fraction(f(n)) for n in range(1, length + 1)))

    @classmethod
    def unit(cls, length: int) -> "ArithSeq":
        return cls.from_function(lambda n: 1 if n == 1 else 0, length)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        if not 1 <= n <= len(self.values):
            raise IndexError(n)
        return self.values[n - 1]

    def __iter__(self):
        return iter(self.values)


def dirichlet_mul(a: ArithSeq, b: ArithSeq) -> ArithSeq:
    """(a * b)(n) = sum_{d | n} a(d) b(n/d)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    N = len(a)
    out = [Fraction(0)] * (N + 1)
    av, bv = a.values, b.values
    for d in range(1, N + 1):
        x = av[d - 1]
        if not x:
            continue
        for e in range(1, N // d + 1):
            y = bv[e - 1]
            if y:
                out[d * e] += x * y
    return ArithSeq(tuple(out[1:]))


def dirichlet_inverse(a: ArithSeq) -> ArithSeq:
    if a[1] == 0:
        raise ZeroDivisionError("a(1) = 0 has no Dirichlet inverse")
    N = len(a)
    inv = [Fraction(0)] * (N + 1)
    inv[1] = 1 / a[1]
    for n in range(2, N + 1):
        s = sum(a[d] * inv[n // d] for d in divisors(n) if d > 1)
        inv[n] = -s / a[1]
    return ArithSeq(tuple(inv[1:]))


def _zeta_shift(a: int, N: int, step: int = 1) -> ArithSeq:
    """Coefficients of zeta(step*s - a): n^(a/step) at step-th powers, else 0."""
    vals = [Fraction(0)] * N
    d = 1
    while d**step <= N:
        vals[d**step - 1] = Fraction(d) ** a
        d += 1
    return ArithSeq(tuple(vals))


def psi_seq(N: int) -> ArithSeq:
    """Coefficients of zeta(s-1) zeta(s) / zeta(2s) up to N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    num = dirichlet_mul(_zeta_shift(1, N), _zeta_shift(0, N))
    return dirichlet_mul(num, dirichlet_inverse(_zeta_shift(0, N, step=2)))


def psi_direct(n: int) -> int:
    """sum_{d^2 | n} mu(d) sigma_1(n/d^2)."""
    return sum(moebius(d) * sigma_pow(1, n // (d * d)) for d in square_divisors(n))


def count_sqrt_zero(x: int) -> int:
    """#{s mod 2x : s^2 = 0 mod 4x}, which is x_1 for x = x_0 x_1^2, x_0 squarefree."""
    if x < 1:
        raise ValueError("x must be >= 1")
    out = 1
    for p, e in factor(x):
        out *= p ** (e // 2)
    return out


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a / n) for arbitrary integers a, n."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a / n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def fundamental_split(disc: int) -> tuple[int, int]:
    """Write disc = D f^2 with D a fundamental discriminant (D = 1 for squares).

    ``disc`` must be nonzero and congruent to 0 or 1 mod 4.
    """
    if disc == 0 or disc % 4 not in (0, 1):
        raise ValueError(f"{disc} is not a discriminant")
    core = -1 if disc < 0 else 1
    sq = 1
    for p, e in factor(disc):
        core *= p ** (e % 2)
        sq *= p ** (e // 2)
    if core % 4 == 1:
        return core, sq
    # core = 2, 3 mod 4: absorb a factor 4 from the square part
    return 4 * core, sq // 2


@lru_cache(maxsize=None)
def gen_bernoulli(n: int, D: int) -> Fraction:
    """Generalized Bernoulli number B_{n, chi_D} for a fundamental discriminant D.

    B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f), f = |D|, with the
    usual convention B_{1, trivial} = 1/2.
    """
    if D == 1:
        return Fraction(1, 2) if n == 1 else bernoulli(n)
    f = abs(D)
    chi = [kronecker(D, a) for a in range(f + 1)]
    # power sums S_e = sum_a chi(a) a^e
    sums = [0] * (n + 1)
    for a in range(1, f):
        c = chi[a]
        if c:
            p = 1
            for e in range(n + 1):
                sums[e] += c * p
                p *= a
    total = Fraction(0)
    for j in range(n + 1):
        bj = bernoulli(j)
        if bj:
            total += comb(n, j) * bj * Fraction(f) ** (j - 1) * sums[n - j]
    return total


def cohen_H(r: int, N: int) -> Fraction:
    """Cohen's generalized class number H(r, N)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    key = (r, N)
    try:
        return _COHEN_H[key]
    except KeyError:
        pass
    if N == 0:
        val = zeta_neg(2 * r)
    else:
        disc = N if r % 2 == 0 else -N
        if disc % 4 not in (0, 1):
            val = Fraction(0)
        else:
            D, f = fundamental_split(disc)
            L = -gen_bernoulli(r, D) / r
            s = 0
            for d in divisors(f):
                mu = moebius(d)
                if mu:
                    s += mu * kronecker(D, d) * d ** (r - 1) * sigma_pow(2 * r - 1, f // d)
            val = L * s
    _COHEN_H[key] = val
    return val


def rat_str(x: Fraction | int) -> str:
    """Canonical "p/q" string (denominator 1 kept explicit)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def seq_equal(a: Sequence, b: Sequence) -> int | None:
    """First 1-based index where two sequences differ, or None."""
    for i, (x, y) in enumerate(zip(a, b), start=1):
        if x != y:
            return i
    return None
