"""Numeric verification of invariant differential operator identities on H_2,
H_1 x C and H_1.

Functions are expanded as truncated Taylor jets in the six Wirtinger
variables (z1, zb1, z2, zb2, z4, zb4), treated as independent, at a sample
point.  Every derivative an operator needs is read off a jet coefficient,
so operator values are exact up to the working precision.  A finite
difference oracle over the real coordinates checks the jet engine.

Conventions: Z = (z1, z2; z2, z4), y_j = Im z_j, t = y4 - y2^2 / y1,
R = -4 pi N, H = h t^k e^(R t) for a test function h of (z1, z2) only.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mp, mpc, mpf

__all__ = [
    "ExpTestFn",
    "SamplePoint",
    "JetSpace",
    "Jet",
    "eval_L",
    "eval_phi1",
    "eval_phi2",
    "eval_maass",
    "phi1_expected",
    "t_decompose",
    "check_residual_kernel",
    "random_point",
    "random_testfn",
    "fd_operator",
    "PHI1_TERMS_MATRIX",
    "PHI1_TERMS_DISPLAY",
    "run_suite",
]

NVARS = 6
Z1, W1, Z2, W2, Z4, W4 = range(NVARS)
Index = tuple[int, ...]


def _idx(**orders: int) -> Index:
    names = ("z1", "w1", "z2", "w2", "z4", "w4")
    return tuple(orders.get(n, 0) for n in names)


# ---------------------------------------------------------------------------
# jets
# ---------------------------------------------------------------------------


class JetSpace:
    """Downward-closed set of multi-indices with the multiplication table it needs."""

    def __init__(self, needed: Iterable[Index]):
        closure: set[Index] = set()
        for top in needed:
            for sub in product(*(range(e + 1) for e in top)):
                closure.add(sub)
        closure.add((0,) * NVARS)
        self.indices = sorted(closure, key=lambda a: (sum(a), a))
        self.degree = max(sum(a) for a in self.indices)
        pos = set(self.indices)
        self.pairs = {
            c: [
                (a, tuple(ci - ai for ci, ai in zip(c, a)))
                for a in product(*(range(e + 1) for e in c))
                if tuple(ci - ai for ci, ai in zip(c, a)) in pos
            ]
            for c in self.indices
        }

    def const(self, value) -> "Jet":
        return Jet(self, {(0,) * NVARS: mpc(value)})

    def var(self, i: int, value) -> "Jet":
        unit = tuple(1 if j == i else 0 for j in range(NVARS))
        coeffs = {(0,) * NVARS: mpc(value)}
        if unit in self.pairs:
            coeffs[unit] = mpc(1)
        return Jet(self, coeffs)


class Jet:
    """Taylor coefficients f^(a)(p) / a! for a in the space's index set."""

    __slots__ = ("space", "c")

    def __init__(self, space: JetSpace, coeffs: dict[Index, mpc]):
        self.space = space
        self.c = coeffs

    @property
    def value(self) -> mpc:
        return self.c.get((0,) * NVARS, mpc(0))

    def derivative(self, a: Index) -> mpc:
        scale = 1
        for e in a:
            scale *= factorial(e)
        return self.c.get(tuple(a), mpc(0)) * scale

    def __add__(self, other):
        if not isinstance(other, Jet):
            other = self.space.const(other)
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return Jet(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.space, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -mpc(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            s = mpc(other)
            return Jet(self.space, {k: s * v for k, v in self.c.items()})
        a, b = self.c, other.c
        out = {}
        for c, pairs in self.space.pairs.items():
            acc = mpc(0)
            for p, q in pairs:
                x = a.get(p)
                if x is not None:
                    y = b.get(q)
                    if y is not None:
                        acc += x * y
            if acc:
                out[c] = acc
        return Jet(self.space, out)

    __rmul__ = __mul__

    def compose(self, taylor: Callable[[mpc, int], list]) -> "Jet":
        """g(self) given taylor(u0, d) = [g(u0), g'(u0), g''(u0)/2!, ...]."""
        u0 = self.value
        delta = self - u0
        coeffs = taylor(u0, self.space.degree)
        out = self.space.const(coeffs[0])
        power = self.space.const(1)
        for j in range(1, self.space.degree + 1):
            power = power * delta
            if not power.c:
                break
            out = out + power * coeffs[j]
        return out

    def exp(self) -> "Jet":
        return self.compose(lambda u, d: [mp.exp(u) / factorial(j) for j in range(d + 1)])

    def pow(self, p) -> "Jet":
        """self^p on the principal branch (the base is real and positive at the points used)."""
        p = mpf(p)
        return self.compose(lambda u, d: [mp.binomial(p, j) * mp.power(u, p - j) for j in range(d + 1)])


# ---------------------------------------------------------------------------
# test functions and points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpTestFn:
    """h = exp(a z1 + a' zb1 + b z2 + b' zb2); every derivative is a monomial times h."""

    alpha: complex
    alpha_bar: complex
    beta: complex
    beta_bar: complex

    def params(self) -> tuple[mpc, ...]:
        return tuple(mpc(v) for v in (self.alpha, self.alpha_bar, self.beta, self.beta_bar))

    def value(self, z1, z2) -> mpc:
        a, ab, b, bb = self.params()
        return mp.exp(a * z1 + ab * mp.conj(z1) + b * z2 + bb * mp.conj(z2))

    def derivative(self, idx: Index, z1, z2) -> mpc:
        """Closed-form mixed Wirtinger derivative."""
        if idx[Z4] or idx[W4]:
            return mpc(0)
        a, ab, b, bb = self.params()
        return a ** idx[Z1] * ab ** idx[W1] * b ** idx[Z2] * bb ** idx[W2] * self.value(z1, z2)

    def jet(self, space: JetSpace, z1, z2) -> Jet:
        a, ab, b, bb = self.params()
        lin = (
            space.var(Z1, z1) * a
            + space.var(W1, mp.conj(z1)) * ab
            + space.var(Z2, z2) * b
            + space.var(W2, mp.conj(z2)) * bb
        )
        return lin.exp()

    def to_dict(self) -> dict:
        return {k: [float(mpc(v).real), float(mpc(v).imag)] for k, v in vars(self).items()}


@dataclass(frozen=True)
class SamplePoint:
    """Z = (z1, z2; z2, z4) in H_2 together with the weight k and index N."""

    z1: mpc
    z2: mpc
    z4: mpc
    k: int | float = 0
    N: int = 1

    def __post_init__(self) -> None:
        if mpc(self.z1).imag <= 0:
            raise ValueError("Im z1 must be positive")
        if self.t <= 0:
            raise ValueError("t = y4 - y2^2/y1 must be positive")

    @property
    def y1(self) -> mpf:
        return mpc(self.z1).imag

    @property
    def y2(self) -> mpf:
        return mpc(self.z2).imag

    @property
    def y4(self) -> mpf:
        return mpc(self.z4).imag

    @property
    def t(self) -> mpf:
        return self.y4 - self.y2**2 / self.y1

    @property
    def R(self) -> mpf:
        return -4 * mp.pi * self.N

    def with_t(self, t) -> "SamplePoint":
        """Same (z1, z2, Re z4), with y4 moved so that t takes the given value."""
        y4 = mpf(t) + self.y2**2 / self.y1
        return SamplePoint(self.z1, self.z2, mpc(mpc(self.z4).real, y4), self.k, self.N)


def random_point(rng: random.Random, k=0, N: int = 1) -> SamplePoint:
    z1 = mpc(rng.uniform(-1, 1), rng.uniform(0.5, 2))
    z2 = mpc(rng.uniform(-1, 1), rng.uniform(-1, 1))
    t = rng.uniform(0.2, 1.5)
    z4 = mpc(rng.uniform(-1, 1), t + z2.imag**2 / z1.imag)
    return SamplePoint(z1, z2, z4, k, N)


def random_testfn(rng: random.Random, scale: float = 2.0) -> ExpTestFn:
    def draw() -> complex:
        while True:
            w = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
            if abs(w) <= scale:
                return w

    return ExpTestFn(draw(), draw(), draw(), draw())


# ---------------------------------------------------------------------------
# operators as term lists: sum coef(p) * d^idx
# ---------------------------------------------------------------------------

Term = tuple[Callable[[SamplePoint], mpc], Index]


def _a(j: int):
    """z_j - zb_j at the point."""

    def f(p: SamplePoint) -> mpc:
        return 2j * {1: p.y1, 2: p.y2, 4: p.y4}[j]

    return f


def _prod(*fs, scale=1):
    def f(p):
        out = mpc(scale)
        for g in fs:
            out *= g(p)
        return out

    return f


def _phi1_matrix_terms() -> list[Term]:
    """tr(A (A dbar)^t d) with A = Z - Zbar and d = (d1, d2/2; d2/2, d4)."""
    entry = {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 4}
    dvar = {1: (Z1, W1), 2: (Z2, W2), 4: (Z4, W4)}
    acc: dict[tuple[Index, tuple[int, int]], mpf] = {}
    for p, l, i, j in product(range(2), repeat=4):
        # A_pl A_ij dbar_jl d_ip
        half = mpf(1)
        if j != l:
            half /= 2
        if i != p:
            half /= 2
        idx = [0] * NVARS
        idx[dvar[entry[(j, l)]][1]] += 1
        idx[dvar[entry[(i, p)]][0]] += 1
        key = (tuple(idx), tuple(sorted((entry[(p, l)], entry[(i, j)]))))
        acc[key] = acc.get(key, 0) + half
    return [(_prod(_a(u), _a(v), scale=c), idx) for (idx, (u, v)), c in sorted(acc.items())]


PHI1_TERMS_MATRIX = _phi1_matrix_terms()

# the ten-term expansion written out coordinate by coordinate
PHI1_TERMS_DISPLAY: list[Term] = [
    (_prod(_a(1), _a(1)), _idx(z1=1, w1=1)),
    (_prod(_a(2), _a(2)), _idx(z1=1, w4=1)),
    (_prod(_a(2), _a(2)), _idx(z4=1, w1=1)),
    (_prod(_a(4), _a(4)), _idx(z4=1, w4=1)),
    (_prod(_a(1), _a(2)), _idx(z1=1, w2=1)),
    (_prod(_a(1), _a(2)), _idx(z2=1, w1=1)),
    (_prod(_a(2), _a(4)), _idx(z2=1, w4=1)),
    (_prod(_a(2), _a(4)), _idx(z4=1, w2=1)),
    (_prod(_a(1), _a(4), scale=mpf(1) / 2), _idx(z2=1, w2=1)),
    (_prod(_a(2), _a(2), scale=mpf(1) / 2), _idx(z2=1, w2=1)),
]


def _det_terms(quarter: bool) -> list[Term]:
    """det(dZ) det(dbar Z); ``quarter`` keeps the 1/2 on the off-diagonal entries."""
    q = mpf(1) / 4 if quarter else mpf(1)
    one = lambda p: mpc(1)  # noqa: E731
    return [
        (one, _idx(z1=1, w1=1, z4=1, w4=1)),
        (lambda p: -mpc(q), _idx(z1=1, z4=1, w2=2)),
        (lambda p: -mpc(q), _idx(w1=1, w4=1, z2=2)),
        (lambda p: mpc(q * q), _idx(z2=2, w2=2)),
    ]


L_TERMS: dict[str, list[Term]] = {
    "1": [
        (_prod(_a(1), _a(1), scale=-1), _idx(z1=1, w1=1)),
        (_prod(_a(2), _a(2), scale=-1), _idx(z2=1, w2=1)),
        (_prod(_a(1), _a(2), scale=-1), _idx(w1=1, z2=1)),
        (_prod(_a(1), _a(2), scale=-1), _idx(z1=1, w2=1)),
    ],
    "2": [(_a(1), _idx(z2=1, w2=1))],
    "3'": [
        (_prod(_a(1), _a(1), scale=-1), _idx(z1=1, w2=2)),
        (_prod(_a(1), _a(1)), _idx(w1=1, z2=2)),
        (_prod(_a(2), _a(1)), _idx(z2=2, w2=1)),
        (_prod(_a(2), _a(1), scale=-1), _idx(z2=1, w2=2)),
    ],
    "4": [
        (_prod(_a(1), _a(1), scale=mpf(1) / 2), _idx(z1=1, z2=2)),
        (_prod(_a(1), _a(1), scale=mpf(1) / 2), _idx(z1=1, w2=2)),
        (_prod(_a(1), _a(1), scale=mpf(1) / 2), _idx(w1=1, z2=2)),
        (_prod(_a(1), _a(1), scale=mpf(1) / 2), _idx(w1=1, w2=2)),
        (_prod(_a(1), _a(1), scale=-mpf(1) / 2), _idx(z1=1, z2=2)),
        (_prod(_a(1), _a(1), scale=mpf(1) / 2), _idx(z1=1, w2=2)),
        (_prod(_a(1), _a(1), scale=mpf(1) / 2), _idx(w1=1, z2=2)),
        (_prod(_a(1), _a(1), scale=-mpf(1) / 2), _idx(w1=1, w2=2)),
        (_prod(_a(1), _a(2)), _idx(z2=2, w2=1)),
        (_prod(_a(1), _a(2)), _idx(z2=1, w2=2)),
    ],
}
# L3 = i L3' + 2i L2
L_TERMS["3"] = [(_prod(c, scale=1j), idx) for c, idx in L_TERMS["3'"]] + [
    (_prod(c, scale=2j), idx) for c, idx in L_TERMS["2"]
]


def _apply(terms: Sequence[Term], p: SamplePoint, deriv: Callable[[Index], mpc]) -> mpc:
    return sum((c(p) * deriv(idx) for c, idx in terms), mpc(0))


# ---------------------------------------------------------------------------
# building H and its relatives as jets
# ---------------------------------------------------------------------------


def _space(terms: Sequence[Term]) -> JetSpace:
    return JetSpace(idx for _, idx in terms)


def _G_jet(space: JetSpace, h: ExpTestFn, p: SamplePoint, t_power, y1_power=0) -> Jet:
    """h * y1^y1_power * t^t_power * e^(R t) as a jet at p."""
    inv2i = mpc(0, -0.5)  # 1/(2i)
    ys = {}
    for j, (zi, wi) in {1: (Z1, W1), 2: (Z2, W2), 4: (Z4, W4)}.items():
        z = mpc(getattr(p, f"z{j}"))
        ys[j] = (space.var(zi, z) - space.var(wi, mp.conj(z))) * inv2i
    t = ys[4] - ys[2] * ys[2] * ys[1].pow(-1)
    out = h.jet(space, p.z1, p.z2) * (t * p.R).exp()
    if t_power:
        out = out * t.pow(t_power)
    if y1_power:
        out = out * ys[1].pow(y1_power)
    return out


def _G_value(h: ExpTestFn, p: SamplePoint, t_power, y1_power=0) -> mpc:
    return h.value(p.z1, p.z2) * mp.power(p.t, t_power) * mp.power(p.y1, y1_power) * mp.exp(p.R * p.t)


def eval_L(j: str | int, h: ExpTestFn, p: SamplePoint) -> mpc:
    """L_j(h)(p) for j in {1, 2, 3, 3', 4}, from the closed-form derivatives of h."""
    terms = L_TERMS[str(j)]
    return _apply(terms, p, lambda idx: h.derivative(idx, p.z1, p.z2))


def eval_phi1(h: ExpTestFn, p: SamplePoint, terms: Sequence[Term] = PHI1_TERMS_MATRIX) -> mpc:
    """Phi_1(H)(p) for H = h t^k e^(R t)."""
    jet = _G_jet(_space(terms), h, p, p.k)
    return _apply(terms, p, jet.derivative)


def eval_phi2(h: ExpTestFn, p: SamplePoint, quarter: bool = True) -> mpc:
    """Phi_2(H)(p) = 16 det(Y)^(5/2) det(dZ) det(dbar Z) (h y1^(-1/2) t^(k-1/2) e^(R t))."""
    terms = _det_terms(quarter)
    jet = _G_jet(_space(terms), h, p, mpf(p.k) - mpf(1) / 2, y1_power=-mpf(1) / 2)
    detY = p.y1 * p.t
    return 16 * mp.power(detY, mpf(5) / 2) * _apply(terms, p, jet.derivative)


def eval_maass(h: ExpTestFn, p: SamplePoint, quarter: bool = True) -> mpc:
    """M(H) = Phi_2(H) + (k - 1/2)(k - 3/2)(Phi_1(H) + k(k - 2) H)."""
    k = mpf(p.k)
    H = _G_value(h, p, k)
    c = (k - mpf(1) / 2) * (k - mpf(3) / 2)
    return eval_phi2(h, p, quarter) + c * (eval_phi1(h, p) + k * (k - 2) * H)


def phi1_expected(h: ExpTestFn, p: SamplePoint) -> tuple[mpc, mpc, mpc]:
    """(c0, c1, c2) with e^(-R t) Phi_1(H) = c0 t^k + c1 t^(k+1) + c2 t^(k+2)."""
    k, R = mpf(p.k), p.R
    hv = h.value(p.z1, p.z2)
    c0 = -(eval_L(1, h, p) + k * (k - 2) * hv)
    c1 = 1j * eval_L(2, h, p) + (R - 2 * R * k) * hv
    c2 = -R * R * hv
    return c0, c1, c2


# ---------------------------------------------------------------------------
# t-decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TDecomposition:
    c0: mpc
    c1: mpc
    c2: mpc
    extra: tuple[mpc, ...]

    @property
    def residual(self) -> mpf:
        """Largest coefficient beyond t^(k+2), relative to the fitted ones."""
        scale = max(abs(self.c0), abs(self.c1), abs(self.c2), mpf(10) ** (-mp.dps))
        return max((abs(e) for e in self.extra), default=mpf(0)) / scale


def t_decompose(values: Sequence, ts: Sequence, k, R) -> TDecomposition:
    """Fit values = (c0 t^k + c1 t^(k+1) + c2 t^(k+2) + ...) e^(R t) through the samples.

    With s >= 4 samples the polynomial has degree s - 1; the coefficients
    beyond t^2 form the residual.
    """
    if len(values) != len(ts) or len(ts) < 4:
        raise ValueError("need at least 4 samples, one value per t")
    ts = [mpf(t) for t in ts]
    spread = max(ts) - min(ts)
    gaps = sorted(abs(a - b) for i, a in enumerate(ts) for b in ts[i + 1 :])
    if spread <= 0 or gaps[0] < spread * mpf(10) ** -6:
        raise ValueError("t samples too close together")
    k, R = mpf(k), mpf(R)
    rhs = mpmath.matrix([mpc(v) / (mp.power(t, k) * mp.exp(R * t)) for v, t in zip(values, ts)])
    V = mpmath.matrix([[t**j for j in range(len(ts))] for t in ts])
    coef = mpmath.lu_solve(V, rhs)
    c = [coef[j] for j in range(len(ts))]
    return TDecomposition(c[0], c[1], c[2], tuple(c[3:]))


def decompose_operator(op: Callable[[ExpTestFn, SamplePoint], mpc], h: ExpTestFn, p: SamplePoint, ts: Sequence) -> TDecomposition:
    pts = [p.with_t(t) for t in ts]
    return t_decompose([op(h, q) for q in pts], ts, p.k, p.R)


# ---------------------------------------------------------------------------
# degree one
# ---------------------------------------------------------------------------


def check_residual_kernel(k, a, b, tau, tol=mpf(10) ** -25) -> tuple[bool, mpf]:
    """D_k(f gbar y^k) against 4 f' gbar' y^(k+2) + 2ik (f' gbar - f gbar') y^(k+1)
    for f = e^(a tau), g = e^(b tau).  Returns (ok, relative error)."""
    a, b, tau, k = mpc(a), mpc(b), mpc(tau), mpf(k)
    space = JetSpace([_idx(z1=1, w1=1)])
    z = space.var(Z1, tau)
    w = space.var(W1, mp.conj(tau))
    y = (z - w) * mpc(0, -0.5)
    F = (z * a + w * mp.conj(b)).exp() * y.pow(k)
    yv = tau.imag
    lhs = 4 * yv**2 * F.derivative(_idx(z1=1, w1=1)) - k * (k - 1) * F.value
    f, fp = mp.exp(a * tau), a * mp.exp(a * tau)
    gb, gbp = mp.conj(mp.exp(b * tau)), mp.conj(b * mp.exp(b * tau))
    rhs = 4 * fp * gbp * yv ** (k + 2) + 2j * k * (fp * gb - f * gbp) * yv ** (k + 1)
    scale = max(abs(rhs), abs(f * gb * yv**k), mpf(10) ** (-mp.dps))
    err = abs(lhs - rhs) / scale
    return err <= tol, err


# ---------------------------------------------------------------------------
# finite-difference oracle
# ---------------------------------------------------------------------------


def _wirtinger_to_real(idx: Index) -> dict[tuple[int, ...], mpc]:
    """d/dz = (d/dx - i d/dy)/2, d/dzb = (d/dx + i d/dy)/2, expanded into real partials.

    Real coordinates are ordered (x1, y1, x2, y2, x4, y4).
    """
    poly: dict[tuple[int, ...], mpc] = {(0,) * NVARS: mpc(1)}
    for var, e in enumerate(idx):
        j = var // 2
        sign = -1 if var % 2 == 0 else 1
        for _ in range(e):
            new: dict[tuple[int, ...], mpc] = {}
            for mono, c in poly.items():
                for slot, factor in ((2 * j, mpc(0.5)), (2 * j + 1, mpc(0, 0.5 * sign))):
                    m = list(mono)
                    m[slot] += 1
                    m = tuple(m)
                    new[m] = new.get(m, 0) + c * factor
            poly = new
    return poly


def fd_derivative(F: Callable[..., mpc], p: SamplePoint, idx: Index) -> mpc:
    """Mixed Wirtinger derivative of F(x1, y1, x2, y2, x4, y4) by mpmath's numerical differentiation."""
    x0 = [mpc(p.z1).real, p.y1, mpc(p.z2).real, p.y2, mpc(p.z4).real, p.y4]
    total = mpc(0)
    for orders, c in _wirtinger_to_real(idx).items():
        total += c * mp.diff(F, x0, orders)
    return total


def fd_operator(which: str, h: ExpTestFn, p: SamplePoint, quarter: bool = True) -> mpc:
    """The same operator values as the jet engine, with derivatives by finite differences."""

    def real_G(t_power, y1_power=0):
        def F(x1, y1, x2, y2, x4, y4):
            q = SamplePoint(mpc(x1, y1), mpc(x2, y2), mpc(x4, y4), p.k, p.N)
            return _G_value(h, q, t_power, y1_power)

        return F

    if which == "phi1":
        F = real_G(mpf(p.k))
        return _apply(PHI1_TERMS_MATRIX, p, lambda idx: fd_derivative(F, p, idx))
    if which == "phi2":
        F = real_G(mpf(p.k) - mpf(1) / 2, -mpf(1) / 2)
        detY = p.y1 * p.t
        return 16 * mp.power(detY, mpf(5) / 2) * _apply(_det_terms(quarter), p, lambda idx: fd_derivative(F, p, idx))
    if which.startswith("L") and which[1:] in L_TERMS:
        F = lambda x1, y1, x2, y2, x4, y4: h.value(mpc(x1, y1), mpc(x2, y2))  # noqa: E731
        return _apply(L_TERMS[which[1:]], p, lambda idx: fd_derivative(F, p, idx))
    raise ValueError(f"unknown operator {which!r}")


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------


def _rel(a, b) -> mpf:
    return abs(a - b) / max(abs(b), mpf(10) ** (-mp.dps))


T_SAMPLES = (mpf("0.3"), mpf("0.55"), mpf("0.8"), mpf("1.1"), mpf("1.45"))


def run_suite(bits: int = 256, points: int = 20, fd_points: int = 10, seed: int = 20260, ks=(0, 2, 4), Ns=(1, 2)) -> dict:
    """Every identity in one report: max relative errors, points tested, precision."""
    rng = random.Random(seed)
    report: dict[str, dict] = {}
    tol = mpf(10) ** -25
    with mp.workprec(bits):

        def record(name, err, tolerance):
            r = report.setdefault(name, {"max_rel_error": 0.0, "points": 0, "tolerance": float(tolerance)})
            r["max_rel_error"] = max(r["max_rel_error"], float(err))
            r["points"] += 1

        for k in ks:
            for N in Ns:
                for _ in range(points):
                    h = random_testfn(rng)
                    p = random_point(rng, k, N)
                    # matrix form against the coordinate display
                    record("phi1_matrix_vs_display", _rel(eval_phi1(h, p, PHI1_TERMS_DISPLAY), eval_phi1(h, p)), tol)
                    # pointwise Phi_1 identity
                    c0, c1, c2 = phi1_expected(h, p)
                    t = p.t
                    expected = (c0 + c1 * t + c2 * t * t) * mp.power(t, k) * mp.exp(p.R * t)
                    record("phi1_decomposition", _rel(eval_phi1(h, p), expected), tol)
                    # D_0^J = 0 and the shape of M(H)
                    dec = decompose_operator(eval_maass, h, p, T_SAMPLES)
                    hv = abs(h.value(p.z1, p.z2))
                    scale = max(abs(dec.c1 * t), abs(dec.c2 * t * t), hv)
                    record("maass_D0_vanishes", abs(dec.c0) / scale, tol)
                    record("maass_three_powers", dec.residual, tol)
                    # the essential part of D_1^J; what remains is recorded, not asserted
                    r_small = -(mpf(k) - mpf(1) / 2) * (mpf(k) - mpf(3) / 2)
                    rj1 = dec.c1 - 2 * p.R * (mpf(k) - mpf(1) / 2) * (eval_L(1, h, p) + r_small * h.value(p.z1, p.z2))
                    rec = report.setdefault("RJ1_empirical", {"max_abs": 0.0, "points": 0})
                    rec["max_abs"] = max(rec["max_abs"], float(abs(rj1)))
                    rec["points"] += 1
                    rec["ok"] = rec.get("ok", True) and bool(mp.isfinite(abs(rj1)))
        for _ in range(points):
            a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            b = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            tau = mpc(rng.uniform(-1, 1), rng.uniform(0.5, 2))
            for k in ks:
                _, err = check_residual_kernel(k, a, b, tau)
                record("residual_kernel", err, tol)
        fd_tol = mpf(10) ** -20
        for _ in range(fd_points):
            h = random_testfn(rng)
            p = random_point(rng, rng.choice(ks), rng.choice(Ns))
            record("fd_L1", _rel(fd_operator("L1", h, p), eval_L(1, h, p)), fd_tol)
            record("fd_L2", _rel(fd_operator("L2", h, p), eval_L(2, h, p)), fd_tol)
            record("fd_phi1", _rel(fd_operator("phi1", h, p), eval_phi1(h, p)), fd_tol)
            record("fd_phi2", _rel(fd_operator("phi2", h, p), eval_phi2(h, p)), fd_tol)
    for r in report.values():
        if "tolerance" in r:
            r["ok"] = r["max_rel_error"] <= r["tolerance"]
    return {"bits": bits, "checks": report, "ok": all(r["ok"] for r in report.values())}


def suite_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
