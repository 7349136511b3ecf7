"""Even unimodular lattices and their representation numbers.

A lattice is given by an even Gram matrix S of determinant 1; a binary
form T = (n, r/2; r/2, m) is represented by X in Z^{2k x 2} when
X'SX / 2 = T.  Counts come from short-vector shells: the norm-n and
norm-m shells are paired and their inner products histogrammed.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, log

import numpy as np
import sympy

from .arith import divisors, g_k, moebius, sigma_pow, square_divisors
from .errors import LatticeError, ResourceCapError
from .jacobi import _check_weight, c_k, siegel_fj
from .qexp import QExp

__all__ = [
    "BinQF",
    "reduce",
    "LatticeGram",
    "E8",
    "E8xE8",
    "D16PLUS",
    "short_vectors",
    "rep_number",
    "rep_sharp",
    "rep_sharp_direct",
    "rep_primitive",
    "rep_primitive_direct",
    "a2k",
    "a2k_maass",
    "a2k_primitive",
    "gl2_divisors",
    "main_term_M",
    "repno_report",
    "repno_csv",
    "hauptsatz_check",
    "saha_sequence",
    "theta1_qexp",
    "reduced_forms",
]


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class BinQF:
    """T = (n, r/2; r/2, m), i.e. n x^2 + r x y + m y^2."""

    n: int
    r: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0 or 4 * self.n * self.m - self.r * self.r < 0:
            raise ValueError(f"{self} is not positive semidefinite")

    @property
    def det2(self) -> int:
        """det(2T) = 4nm - r^2."""
        return 4 * self.n * self.m - self.r * self.r

    @property
    def det(self) -> Fraction:
        return Fraction(self.det2, 4)

    @property
    def content(self) -> int:
        return gcd(gcd(self.n, self.r), self.m)

    @property
    def positive(self) -> bool:
        return self.n > 0 and self.det2 > 0

    def is_reduced(self) -> bool:
        return abs(self.r) <= self.m <= self.n

    @property
    def minimum(self) -> int:
        """min of x'Tx over nonzero x (for positive T)."""
        return reduce(self)[0].m

    def transform(self, U) -> "BinQF":
        """T[U] = U' T U for an integer 2x2 matrix U."""
        (a, b), (c, d) = U
        n, r, m = self.n, self.r, self.m
        return BinQF(
            n * a * a + r * a * c + m * c * c,
            2 * n * a * b + r * (a * d + b * c) + 2 * m * c * d,
            n * b * b + r * b * d + m * d * d,
        )

    def matrix2(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """2T as an integer matrix."""
        return ((2 * self.n, self.r), (self.r, 2 * self.m))


def _matmul2(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def reduce(T: BinQF) -> tuple[BinQF, tuple[tuple[int, int], tuple[int, int]]]:
    """GL_2(Z)-reduced form 0 <= r <= m <= n and U with T[U] equal to it."""
    if not T.positive:
        raise ValueError(f"{T} is not positive definite")
    n, r, m = T.n, T.r, T.m
    U = ((1, 0), (0, 1))
    while True:
        if m > n:
            n, m = m, n
            U = _matmul2(U, ((0, 1), (1, 0)))
        # column 0 += k column 1 moves r by 2km
        k = -((r + m) // (2 * m))
        if r + 2 * k * m == -m:
            k += 1
        if k:
            n, r = n + k * r + k * k * m, r + 2 * k * m
            U = _matmul2(U, ((1, 0), (k, 1)))
        if m <= n:
            break
    if r < 0:
        r = -r
        U = _matmul2(U, ((1, 0), (0, -1)))
    red = BinQF(n, r, m)
    assert T.transform(U) == red
    return red, U


def reduced_forms(det2_max: int, positive_only: bool = True) -> list[BinQF]:
    """All reduced 0 <= r <= m <= n with 0 < det(2T) <= det2_max."""
    out = []
    m = 1
    while 3 * m * m <= det2_max:
        for r in range(m + 1):
            n = m
            while 4 * n * m - r * r <= det2_max:
                out.append(BinQF(n, r, m))
                n += 1
        m += 1
    return sorted(out, key=lambda t: (t.det2, t.m, t.r, t.n))


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------


def _det_exact(gram: np.ndarray) -> int:
    return int(sympy.Matrix(gram.tolist()).det())


class LatticeGram:
    """Even unimodular lattice given by its Gram matrix S (x'Sx even, det S = 1).

    ``frame`` optionally embeds the basis in doubled orthonormal coordinates
    (row i is 2 b_i) and ``blocks`` splits those coordinates into groups on
    which every permutation with an even number of sign changes is an
    automorphism.  Pair counts then run once per orbit of that group instead
    of once per vector.  Shells and histograms are cached on the instance.
    """

    def __init__(self, gram, name: str = "", frame=None, blocks: tuple[int, ...] | None = None):
        S = np.array(gram, dtype=np.int64)
        if S.ndim != 2 or S.shape[0] != S.shape[1]:
            raise LatticeError("Gram matrix must be square")
        if not np.array_equal(S, S.T):
            raise LatticeError("Gram matrix is not symmetric")
        if np.any(np.diag(S) % 2):
            raise LatticeError("Gram matrix has an odd diagonal entry")
        try:
            np.linalg.cholesky(S.astype(float))
        except np.linalg.LinAlgError:
            raise LatticeError("Gram matrix is not positive definite") from None
        if _det_exact(S) != 1:
            raise LatticeError("Gram matrix does not have determinant 1")
        if frame is not None:
            frame = np.array(frame, dtype=np.int64)
            if not np.array_equal(frame @ frame.T, 4 * S):
                raise LatticeError("frame does not reproduce the Gram matrix")
            blocks = tuple(blocks or (S.shape[0],))
            if sum(blocks) != frame.shape[1]:
                raise LatticeError("blocks do not cover the frame coordinates")
        self.gram = S
        self.dim = S.shape[0]
        self.name = name
        self.frame = frame
        self.blocks = blocks
        self._vectors = np.zeros((0, self.dim), dtype=np.int64)
        self._norms = np.zeros(0, dtype=np.int64)
        self._bound = -1
        self._hist: dict[tuple[int, int, bool], dict[int, int]] = {}

    @property
    def weight(self) -> int:
        return self.dim // 2

    def __repr__(self) -> str:
        return f"<LatticeGram {self.name or 'unnamed'} dim={self.dim}>"

    # -- serialization ---------------------------------------------------
    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "gram": self.gram.tolist()}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "LatticeGram":
        try:
            d = json.loads(text)
            gram = d["gram"]
            dim = int(d["dim"])
        except (ValueError, KeyError, TypeError) as exc:
            raise LatticeError(f"malformed lattice JSON: {exc}") from None
        if dim % 8 or len(gram) != dim:
            raise LatticeError(f"dim {dim} must be a multiple of 8 matching the Gram matrix")
        return cls(gram, name=name)

    # -- shells ----------------------------------------------------------
    def _ensure(self, bound: int) -> None:
        if bound > self._bound:
            vecs = short_vectors(self.gram, bound)
            self._vectors = vecs
            self._norms = _half_norms(self.gram, vecs)
            self._bound = bound

    def shell(self, n: int) -> np.ndarray:
        """All x with x'Sx / 2 = n."""
        self._ensure(n)
        return self._vectors[self._norms == n]

    def shell_count(self, n: int) -> int:
        return len(self.shell(n))

    def orbit_keys(self, Y: np.ndarray) -> np.ndarray | None:
        """Per-row invariant that is constant exactly on orbits of the frame symmetry group."""
        if self.frame is None:
            return None
        V = Y @ self.frame
        cols = []
        start = 0
        for size in self.blocks:
            B = V[:, start : start + size]
            start += size
            cols.append(np.sort(np.abs(B), axis=1))
            parity = (B < 0).sum(axis=1) % 2
            parity[np.any(B == 0, axis=1)] = 0
            cols.append(parity[:, None])
        return np.hstack(cols)

    def histogram(self, n: int, m: int, primitive_second: bool = False, use_symmetry: bool = True) -> dict[int, int]:
        """r -> #{(x, y) : x'Sx/2 = n, y'Sy/2 = m, x'Sy = r}, optionally with y primitive."""
        key = (n, m, primitive_second)
        if use_symmetry and key in self._hist:
            return self._hist[key]
        X = self.shell(n)
        Y = self.shell(m)
        if primitive_second:
            Y = Y[_primitive_rows(Y)]
        keys = self.orbit_keys(Y) if use_symmetry else None
        if keys is None:
            hist = _pair_histogram(self.gram, X, Y)
        else:
            hist = _orbit_histogram(self.gram, X, Y, keys)
        if use_symmetry:
            self._hist[key] = hist
        return hist


def _half_norms(S: np.ndarray, X: np.ndarray) -> np.ndarray:
    return np.einsum("ij,jk,ik->i", X, S, X) // 2


def _primitive_rows(Y: np.ndarray) -> np.ndarray:
    g = np.zeros(len(Y), dtype=np.int64)
    for j in range(Y.shape[1]):
        g = np.gcd(g, Y[:, j])
    return g == 1


def _count_products(X: np.ndarray, B: np.ndarray, weights: np.ndarray | None = None, chunk: int = 1 << 24) -> dict[int, int]:
    """Histogram of the entries of X @ B, column j weighted by weights[j]."""
    if len(X) == 0 or B.shape[1] == 0:
        return {}
    Xf = X.astype(np.float64)
    Bf = B.astype(np.float64)
    bound = int(np.abs(Xf).sum(axis=1).max() * np.abs(Bf).max()) + 1
    counts = np.zeros(2 * bound + 1, dtype=np.int64)
    rows = max(1, chunk // B.shape[1])
    for start in range(0, len(X), rows):
        P = np.rint(Xf[start : start + rows] @ Bf).astype(np.int64) + bound
        if weights is None:
            counts += np.bincount(P.ravel(), minlength=len(counts))
        else:
            w = np.broadcast_to(weights, P.shape).ravel()
            counts += np.bincount(P.ravel(), weights=w, minlength=len(counts)).astype(np.int64)
    return {int(i) - bound: int(counts[i]) for i in np.nonzero(counts)[0]}


def _pair_histogram(S: np.ndarray, X: np.ndarray, Y: np.ndarray) -> dict[int, int]:
    """Brute-force histogram of x'Sy over X x Y."""
    return _count_products(X, S @ Y.T)


def _orbit_histogram(S: np.ndarray, X: np.ndarray, Y: np.ndarray, keys: np.ndarray) -> dict[int, int]:
    """Histogram of x'Sy with y replaced by one representative per orbit, weighted by orbit size.

    Valid because an automorphism g fixing the X shell gives
    #{x : x'S(gy) = r} = #{x : x'Sy = r}.
    """
    if len(Y) == 0:
        return {}
    _, first, sizes = np.unique(keys, axis=0, return_index=True, return_counts=True)
    reps = Y[first]
    return _count_products(X, S @ reps.T, weights=sizes.astype(np.float64))


def _pivots(S: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """x'Sx/2 = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    q = S.astype(np.float64) / 2
    d = len(q)
    for i in range(d):
        for j in range(i + 1, d):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, d):
            for l in range(k, d):
                q[k, l] -= q[k, i] * q[i, l]
    return np.diag(q).copy(), np.triu(q, 1)


def short_vectors(S: "LatticeGram | np.ndarray", bound: int) -> np.ndarray:
    """All x with x'Sx / 2 <= bound (zero included), as an int64 array.

    Fincke-Pohst enumeration, one coordinate at a time over the whole frontier;
    floating-point interval ends carry a margin and the final norms are checked
    in integer arithmetic.
    """
    gram = S.gram if isinstance(S, LatticeGram) else np.asarray(S, dtype=np.int64)
    d = len(gram)
    if bound < 0:
        return np.zeros((0, d), dtype=np.int64)
    diag, upper = _pivots(gram)
    coords = np.zeros((1, d), dtype=np.int64)
    acc = np.zeros((1, d))  # acc[:, i] = sum_{j assigned} q_ij x_j
    rem = np.array([float(bound)])
    for i in range(d - 1, -1, -1):
        centre = -acc[:, i]
        width = np.sqrt(np.maximum(rem, 0) / diag[i]) + 1e-9
        lo = np.ceil(centre - width).astype(np.int64)
        hi = np.floor(centre + width).astype(np.int64)
        cnt = np.maximum(hi - lo + 1, 0)
        idx = np.repeat(np.arange(len(cnt)), cnt)
        offs = np.arange(int(cnt.sum())) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        xi = lo[idx] + offs
        coords = coords[idx]
        coords[:, i] = xi
        rem = rem[idx] - diag[i] * (xi - centre[idx]) ** 2
        acc = acc[idx] + np.outer(xi, upper[:, i])
        keep = rem > -1e-6
        coords, rem, acc = coords[keep], rem[keep], acc[keep]
    return coords[_half_norms(gram, coords) <= bound]


# built-in lattices ----------------------------------------------------------


def _dn_plus_frame(n: int) -> np.ndarray:
    """Doubled coordinates of a basis of D_n^+ (n = 0 mod 8).

    e_i - e_{i+1} (i = 2..n-1), e_{n-1} + e_n and the glue (1/2, ..., 1/2);
    a determinant-1 sublattice of D_n^+ is all of it.
    """
    F = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 2):
        F[i, i + 1], F[i, i + 2] = 2, -2
    F[n - 2, n - 2], F[n - 2, n - 1] = 2, 2
    F[n - 1, :] = 1
    return F


def _block(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((len(A) + len(B), A.shape[1] + B.shape[1]), dtype=np.int64)
    out[: len(A), : A.shape[1]] = A
    out[len(A) :, A.shape[1] :] = B
    return out


def e8_cartan() -> np.ndarray:
    """Cartan matrix of E8 (chain 1-3-4-5-6-7-8 with node 2 on node 4)."""
    C = 2 * np.eye(8, dtype=np.int64)
    for a, b in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]:
        C[a, b] = C[b, a] = -1
    return C


def _from_frame(F: np.ndarray, name: str, blocks: tuple[int, ...]) -> LatticeGram:
    G = F @ F.T
    return LatticeGram(G // 4, name, frame=F, blocks=blocks)


@lru_cache(maxsize=None)
def builtin(name: str) -> LatticeGram:
    """Shared instance of a built-in lattice: 'E8', 'E8xE8', 'D16+' or 'E8cartan'."""
    if name == E8:
        return _from_frame(_dn_plus_frame(8), E8, (8,))
    if name == E8xE8:
        return _from_frame(_block(_dn_plus_frame(8), _dn_plus_frame(8)), E8xE8, (8, 8))
    if name == D16PLUS:
        return _from_frame(_dn_plus_frame(16), D16PLUS, (16,))
    if name == "E8cartan":
        return LatticeGram(e8_cartan(), "E8cartan")
    raise KeyError(f"unknown lattice {name!r}")


E8, E8xE8, D16PLUS = "E8", "E8xE8", "D16+"


# ---------------------------------------------------------------------------
# representation numbers
# ---------------------------------------------------------------------------


def _as_lattice(S) -> LatticeGram:
    return builtin(S) if isinstance(S, str) else S


def rep_number(S, T: BinQF) -> int:
    """A(S, T) = #{X : X'SX / 2 = T}."""
    L = _as_lattice(S)
    return L.histogram(T.n, T.m).get(T.r, 0)


def rep_sharp(S, T: BinQF) -> int:
    """sum_{t^2 | m, t | r} mu(t) A(S, (n, r/t, m/t^2)): pairs whose second column is primitive."""
    if T.m < 1:
        raise ValueError("rep_sharp needs m >= 1")
    total = 0
    for t in square_divisors(T.m):
        if T.r % t == 0 and moebius(t):
            total += moebius(t) * rep_number(S, BinQF(T.n, T.r // t, T.m // (t * t)))
    return total


def rep_sharp_direct(S, T: BinQF) -> int:
    """Pairs (x, y) representing T with y primitive, counted directly."""
    return _as_lattice(S).histogram(T.n, T.m, primitive_second=True).get(T.r, 0)


def rep_primitive(S, T: "BinQF | int") -> int:
    """A*(S, T): X primitive (2x2 minors coprime); for an integer m, primitive vectors of norm m."""
    L = _as_lattice(S)
    if isinstance(T, int):
        if T < 1:
            return 0
        return int(_primitive_rows(L.shell(T)).sum())
    return _rep_primitive_matrix(L, T)


def _rep_primitive_matrix(L: LatticeGram, T: BinQF) -> int:
    total = rep_number(L, T)
    for G in gl2_divisors(T)[1:]:
        total -= _rep_primitive_matrix(L, _divide(T, G))
    return total


def rep_primitive_direct(S, T: BinQF) -> int:
    """A*(S, T) by listing every representing pair and testing its 2x2 minors."""
    L = _as_lattice(S)
    X, Y = L.shell(T.n), L.shell(T.m)
    SY = L.gram @ Y.T
    a, b = np.triu_indices(L.dim, 1)
    count = 0
    rows = max(1, (1 << 22) // max(1, len(Y)))
    for start in range(0, len(X), rows):
        i, j = np.nonzero(X[start : start + rows] @ SY == T.r)
        x, y = X[start + i], Y[j]
        minors = x[:, a] * y[:, b] - x[:, b] * y[:, a]
        count += int((np.gcd.reduce(minors, axis=1) == 1).sum())
    return count


def theta1_qexp(S, prec: int) -> tuple[QExp, QExp]:
    """Degree-1 theta series sum A(S, n) q^n and its difference from E_k (a cusp form)."""
    from .qexp import eisenstein_qexp

    L = _as_lattice(S)
    L._ensure(prec - 1)
    counts = np.bincount(L._norms[L._norms < prec], minlength=prec)
    theta = QExp(L.weight, tuple(Fraction(int(c)) for c in counts))
    cusp = theta - eisenstein_qexp(L.weight, prec)
    return theta, QExp(L.weight, cusp.coeffs, cuspidal=True)


# ---------------------------------------------------------------------------
# Siegel Eisenstein coefficients and their primitive parts
# ---------------------------------------------------------------------------


def _divide(T: BinQF, G) -> BinQF:
    """T[G^-1] for G = ((a, b), (0, d)), assuming it is half-integral."""
    (a, b), (_, d) = G
    # G^-1 = ((1/a, -b/(ad)), (0, 1/d))
    p, q, u = Fraction(1, a), Fraction(-b, a * d), Fraction(1, d)
    nn = T.n * p * p
    rr = 2 * T.n * p * q + T.r * p * u
    mm = T.n * q * q + T.r * q * u + T.m * u * u
    if nn.denominator != 1 or rr.denominator != 1 or mm.denominator != 1:
        raise ValueError(f"{T}[G^-1] is not half-integral for G = {G}")
    return BinQF(int(nn), int(rr), int(mm))


def gl2_divisors(T: BinQF) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Hermite normal forms G = ((a, b), (0, d)), 0 <= b < d, with T[G^-1] half-integral.

    These are the classes GL_2(Z) G with T = T'[G] for a half-integral T';
    the identity comes first.
    """
    out = []
    D = T.det2
    for a in range(1, isqrt(D) + 1 if D else 2):
        for d in range(1, isqrt(D) // a + 1 if D else 2):
            if D % (a * d) ** 2:
                continue
            for b in range(d):
                try:
                    _divide(T, ((a, b), (0, d)))
                except ValueError:
                    continue
                out.append(((a, b), (0, d)))
    out.sort(key=lambda G: (G[0][0] * G[1][1], G))
    return out


_FJ_PREC: dict[tuple[int, int], int] = {}


def _fj_coefficient(k: int, m: int, n: int, r: int) -> Fraction:
    """e_{k,m}(n, r), computing e_{k,m} at a precision that grows geometrically."""
    prec = _FJ_PREC.get((k, m), 0)
    if prec <= n:
        prec = max(n + 1, 2 * prec, 4)
        _FJ_PREC[(k, m)] = prec
    return siegel_fj(k, m, prec)[n, r]


def a2k(T: BinQF, k: int) -> Fraction:
    """Fourier coefficient a_2^k(T) of the degree-2 Siegel Eisenstein series (constant term 1).

    Read off the Fourier-Jacobi coefficient of the smallest index in the class of T.
    """
    _check_weight(k)
    if T.n == T.r == T.m == 0:
        return Fraction(1)
    if T.det2 == 0:
        # rank one: GL_2-equivalent to (c, 0, 0), c = gcd(n, m), a coefficient of E_k
        return c_k(k) * sigma_pow(k - 1, gcd(T.n, T.m))
    red, _ = reduce(T)
    return _fj_coefficient(k, red.m, red.n, red.r)


def a2k_maass(T: BinQF, k: int) -> Fraction:
    """c_k sum_{a | (n, r, m)} a^(k-1) H(k-1, det(2T)/a^2) / H(k-1, 0), for T positive."""
    from .arith import cohen_H

    _check_weight(k)
    h0 = cohen_H(k - 1, 0)
    return c_k(k) * sum(
        (Fraction(a) ** (k - 1) * cohen_H(k - 1, T.det2 // (a * a)) / h0 for a in divisors(T.content)),
        Fraction(0),
    )


@lru_cache(maxsize=4096)
def _a2k_primitive_reduced(T: BinQF, k: int) -> Fraction:
    total = a2k(T, k)
    for G in gl2_divisors(T)[1:]:
        total -= _a2k_primitive_reduced(reduce(_divide(T, G))[0], k)
    return total


def a2k_primitive(T: BinQF, k: int) -> Fraction:
    """a_2^k(T)^*, defined by a_2^k(T) = sum_G a_2^k(T[G^-1])^* over :func:`gl2_divisors`."""
    _check_weight(k)
    return _a2k_primitive_reduced(reduce(T)[0], k)


# ---------------------------------------------------------------------------
# main term and reports
# ---------------------------------------------------------------------------


def theta_alpha(S, k: int, m: int, t: int) -> Fraction:
    """alpha_m(t; theta^1(S)) = sum_{l | t} mu(t/l) A*(S, m/l^2) / g_k(m/l^2)."""
    return sum(
        (moebius(t // l) * Fraction(rep_primitive(S, m // (l * l))) / g_k(k, m // (l * l)) for l in divisors(t)),
        Fraction(0),
    )


def main_term_M(S, T: BinQF) -> Fraction:
    """M(S, T) = sum_{t^2 | m, t | r} alpha_m(t; theta^1(S)) a_2^k(n, r/t, m/t^2) for reduced T."""
    L = _as_lattice(S)
    if not T.is_reduced() or not T.positive:
        raise ValueError(f"{T} must be positive and reduced")
    k = L.weight
    total = Fraction(0)
    for t in square_divisors(T.m):
        if T.r % t:
            continue
        total += theta_alpha(L, k, T.m, t) * a2k(BinQF(T.n, T.r // t, T.m // (t * t)), k)
    return total


@dataclass(frozen=True)
class RepnoRow:
    T: BinQF
    A: int
    main: Fraction
    M: Fraction
    mst_ratio: float

    @property
    def diff(self) -> Fraction:
        return self.A - self.main

    def as_csv_row(self) -> list:
        t = self.T
        return [t.n, t.r, t.m, str(t.det), self.A, _rat(self.main), _rat(self.diff), f"{self.mst_ratio:.12g}"]


def _rat(x: Fraction) -> str:
    from .arith import rat_str

    return rat_str(x)


def repno_report(S, T_scan) -> list[RepnoRow]:
    """A(S, T), c_k^-1 M(S, T), their difference, and the lower-bound ratio.

    The ratio is M sigma_{k-1}(min T) (1 + log min T) / (A(S, min T) det(T)^(k - 3/2));
    ``1 + log`` keeps min T = 1 from dividing out.  It is nan when A(S, min T) = 0.
    """
    L = _as_lattice(S)
    k = L.weight
    inv = 1 / c_k(k)
    rows = []
    for T in T_scan:
        M = main_term_M(L, T)
        mt = T.m
        amin = L.shell_count(mt)
        if amin:
            ratio = float(M) * sigma_pow(k - 1, mt) * (1 + log(mt)) / (amin * float(T.det) ** (k - 1.5))
        else:
            ratio = float("nan")
        rows.append(RepnoRow(T, rep_number(L, T), inv * M, M, ratio))
    return rows


REPNO_COLUMNS = ("n", "r", "m", "detT", "A", "main", "diff", "mst_ratio")


def repno_csv(rows: list[RepnoRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPNO_COLUMNS)
    for row in rows:
        w.writerow(row.as_csv_row())
    return buf.getvalue()


def mass_weights(aut_orders) -> list[Fraction]:
    """Normalize 1/|Aut(S_nu)| to sum 1."""
    inv = [Fraction(1, int(a)) for a in aut_orders]
    total = sum(inv)
    return [w / total for w in inv]


def hauptsatz_check(genus, k: int, T_scan) -> dict:
    """sum_nu w_nu A(S_nu, T) against a_2^k(T) on every T of the scan."""
    weights = [Fraction(w) for _, w in genus]
    if sum(weights) != 1:
        raise ValueError(f"mass weights sum to {sum(weights)}, not 1")
    lattices = [_as_lattice(S) for S, _ in genus]
    if any(L.weight != k for L in lattices):
        raise ValueError("genus members must have rank 2k")
    rows = []
    for T in T_scan:
        lhs = sum((w * rep_number(L, T) for L, w in zip(lattices, weights)), Fraction(0))
        rhs = a2k(T, k)
        rows.append({"T": [T.n, T.r, T.m], "average": _rat(lhs), "a2k": _rat(rhs), "ok": lhs == rhs})
    return {"k": k, "ok": all(r["ok"] for r in rows), "rows": rows}


def hauptsatz_check_degree1(genus, k: int, prec: int) -> bool:
    """sum_nu w_nu A(S_nu, n) against the coefficients of E_k for n < prec."""
    from .qexp import eisenstein_qexp

    weights = [Fraction(w) for _, w in genus]
    if sum(weights) != 1:
        raise ValueError(f"mass weights sum to {sum(weights)}, not 1")
    ek = eisenstein_qexp(k, prec)
    avg = [Fraction(0)] * prec
    for (S, _), w in zip(genus, weights):
        theta, _ = theta1_qexp(S, prec)
        avg = [a + w * c for a, c in zip(avg, theta.coeffs)]
    return tuple(avg) == ek.coeffs


def saha_sequence(m_list, cap: int = 10**6) -> list[BinQF]:
    """T_j = (n_j, 1, m_j) with n_j > m_j minimal such that D_j = 4 m_j n_j - 1 is a
    prime exceeding D_{j-1}.

    Raises :class:`ResourceCapError` carrying the forms found so far when some
    n_j is not found within ``cap`` steps.
    """
    m_list = list(m_list)
    if any(b <= a for a, b in zip(m_list, m_list[1:])):
        raise ValueError("m values must be strictly increasing")
    if any(m < 1 for m in m_list):
        raise ValueError("m values must be positive")
    out: list[BinQF] = []
    prev = 0
    for m in m_list:
        n = m + 1
        while not (4 * m * n - 1 > prev and sympy.isprime(4 * m * n - 1)):
            n += 1
            if n - m > cap:
                raise ResourceCapError(f"no n <= {m + cap} for m = {m}", partial=out)
        T = BinQF(n, 1, m)
        out.append(T)
        prev = T.det2
    return out
