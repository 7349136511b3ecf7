"""Truncated Fourier expansions of Jacobi forms and their theta decomposition."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterator, Mapping

from .arith import rat_str
from .errors import InvariantError, PrecisionError

__all__ = [
    "JacExp",
    "ThetaComponents",
    "index_range",
    "tabulate",
    "theta_decompose",
    "theta_reassemble",
    "is_cuspidal",
]


def index_range(m: int, prec: int, degenerate_only: bool = False) -> Iterator[tuple[int, int]]:
    """All (n, r) with 0 <= n < prec and r^2 <= 4mn (or r^2 == 4mn)."""
    for n in range(prec):
        bound = isqrt(4 * m * n)
        for r in range(-bound, bound + 1):
            if degenerate_only and r * r != 4 * m * n:
                continue
            yield n, r


def _fold(r: int, m: int) -> int:
    """Representative of {r, -r} mod 2m in [0, m]."""
    rho = r % (2 * m)
    return min(rho, 2 * m - rho)


class JacExp:
    """Coefficients c(n, r), 0 <= n < prec, of a Jacobi form of weight k and index m.

    Values are stored per class (D, r mod 2m) with D = 4mn - r^2, folding
    r -> -r; the constructor rejects tables that break either symmetry.
    Reads outside 4mn >= r^2 return 0; reads of a class the table never
    saw raise :class:`PrecisionError`.
    """

    __slots__ = ("k", "m", "prec", "partial", "_classes")

    def __init__(
        self,
        k: int,
        m: int,
        prec: int,
        table: Mapping[tuple[int, int], Fraction],
        *,
        partial: bool = False,
    ):
        if m < 1:
            raise ValueError("index must be >= 1")
        if prec < 1:
            raise ValueError("prec must be >= 1")
        self.k, self.m, self.prec, self.partial = k, m, prec, partial
        classes: dict[tuple[int, int], Fraction] = {}
        for (n, r), value in table.items():
            D = 4 * m * n - r * r
            if D < 0:
                raise InvariantError(f"coefficient at ({n}, {r}) outside 4mn >= r^2")
            if not 0 <= n < prec:
                continue
            key = (D, _fold(r, m))
            value = Fraction(value)
            old = classes.setdefault(key, value)
            if old != value:
                raise InvariantError(
                    f"c({n}, {r}) = {value} but the class D={D}, r={r} mod {2 * m} already holds {old}"
                )
        if not partial:
            for n, r in index_range(m, prec):
                if (4 * m * n - r * r, _fold(r, m)) not in classes:
                    raise InvariantError(f"table misses ({n}, {r})")
        self._classes = classes

    # -- reads ---------------------------------------------------------
    def coeff_disc(self, D: int, r: int) -> Fraction:
        """c(D, r) with D = 4mn - r^2 >= 0 (D < 0 gives 0)."""
        if D < 0:
            return Fraction(0)
        if (D + r * r) % (4 * self.m):
            raise ValueError(f"D={D} is not congruent to -r^2 mod {4 * self.m}")
        try:
            return self._classes[(D, _fold(r, self.m))]
        except KeyError:
            raise PrecisionError(
                f"class D={D}, r={r} mod {2 * self.m} not in expansion (index {self.m}, prec {self.prec})"
            ) from None

    def __getitem__(self, nr: tuple[int, int]) -> Fraction:
        n, r = nr
        return self.coeff_disc(4 * self.m * n - r * r, r)

    def get(self, n: int, r: int) -> Fraction:
        return self[n, r]

    def items(self, degenerate_only: bool = False) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """(n, r) -> c(n, r) over the stored range (r of both signs)."""
        for n, r in index_range(self.m, self.prec, degenerate_only or self.partial):
            yield (n, r), self[n, r]

    def table(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.items())

    def degenerate(self) -> dict[int, Fraction]:
        """r mod 2m -> c(r^2/4m, r) for the degenerate classes (4m | r^2)."""
        out = {}
        for rho in range(2 * self.m):
            if (rho * rho) % (4 * self.m) == 0:
                out[rho] = self.coeff_disc(0, rho)
        return out

    # -- arithmetic ----------------------------------------------------
    def _combine(self, other: "JacExp", op: Callable[[Fraction, Fraction], Fraction]) -> "JacExp":
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError("weight/index mismatch")
        prec = min(self.prec, other.prec)
        partial = self.partial or other.partial
        tab = {nr: op(self[nr], other[nr]) for nr in index_range(self.m, prec, partial)}
        return JacExp(self.k, self.m, prec, tab, partial=partial)

    def __add__(self, other: "JacExp") -> "JacExp":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "JacExp") -> "JacExp":
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c) -> "JacExp":
        c = Fraction(c)
        tab = {nr: c * v for nr, v in self.items()}
        return JacExp(self.k, self.m, self.prec, tab, partial=self.partial)

    def truncate(self, prec: int) -> "JacExp":
        if prec > self.prec:
            raise PrecisionError(f"cannot raise prec {self.prec} to {prec}")
        tab = {nr: self[nr] for nr in index_range(self.m, prec, self.partial)}
        return JacExp(self.k, self.m, prec, tab, partial=self.partial)

    def degenerate_part(self) -> "JacExp":
        tab = {nr: self[nr] for nr in index_range(self.m, self.prec, True)}
        return JacExp(self.k, self.m, self.prec, tab, partial=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JacExp):
            return NotImplemented
        return (
            (self.k, self.m, self.prec, self.partial) == (other.k, other.m, other.prec, other.partial)
            and dict(self.items()) == dict(other.items())
        )

    def equal_on_common_range(self, other: "JacExp") -> bool:
        if (self.k, self.m) != (other.k, other.m):
            return False
        prec = min(self.prec, other.prec)
        partial = self.partial or other.partial
        return all(self[nr] == other[nr] for nr in index_range(self.m, prec, partial))

    def is_zero(self) -> bool:
        return not any(self._classes.values())

    def __repr__(self) -> str:
        kind = "degenerate part of " if self.partial else ""
        return f"<{kind}JacExp k={self.k} m={self.m} prec={self.prec}>"

    # -- serialization -------------------------------------------------
    def to_dict(self) -> dict:
        coeffs = [[n, r, rat_str(v)] for (n, r), v in self.items() if r >= 0]
        return {"k": self.k, "m": self.m, "prec": self.prec, "coeffs": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: Mapping) -> "JacExp":
        tab: dict[tuple[int, int], Fraction] = {}
        for n, r, v in d["coeffs"]:
            if r < 0:
                raise ValueError("serialized expansions carry r >= 0 only")
            tab[(n, r)] = tab[(n, -r)] = Fraction(v)
        return cls(d["k"], d["m"], d["prec"], tab)

    @classmethod
    def from_json(cls, text: str) -> "JacExp":
        return cls.from_dict(json.loads(text))


def tabulate(
    k: int,
    m: int,
    prec: int,
    coeff: Callable[[int, int], Fraction],
    degenerate_only: bool = False,
) -> JacExp:
    """Build a JacExp by evaluating ``coeff(n, r)`` over the whole range."""
    tab = {(n, r): coeff(n, r) for n, r in index_range(m, prec, degenerate_only)}
    return JacExp(k, m, prec, tab, partial=degenerate_only)


@dataclass(frozen=True)
class ThetaComponents:
    """h_{m,mu}(tau) = sum_e c_mu(e) q^e with exponents e = n - mu^2/4m >= 0."""

    k: int
    m: int
    prec: int
    components: tuple[dict[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.components) != 2 * self.m:
            raise ValueError("need one component per mu mod 2m")
        if any(e < 0 for h in self.components for e in h):
            raise ValueError("negative exponent in a theta component")

    def coefficient(self, mu: int, exponent: Fraction) -> Fraction:
        return self.components[mu % (2 * self.m)].get(Fraction(exponent), Fraction(0))


def theta_decompose(phi: JacExp) -> ThetaComponents:
    """Split phi into its 2m theta components h_{m,mu}."""
    m = phi.m
    comps: list[dict[Fraction, Fraction]] = [{} for _ in range(2 * m)]
    for (n, r), v in phi.items():
        e = Fraction(4 * m * n - r * r, 4 * m)
        h = comps[r % (2 * m)]
        old = h.setdefault(e, v)
        if old != v:
            raise InvariantError(f"theta component {r % (2 * m)} has two values at exponent {e}")
    return ThetaComponents(phi.k, m, phi.prec, tuple(comps))


def theta_reassemble(theta: ThetaComponents, partial: bool = False) -> JacExp:
    """Inverse of :func:`theta_decompose` on the stored range."""
    m = theta.m
    tab = {}
    for n, r in index_range(m, theta.prec, partial):
        e = Fraction(4 * m * n - r * r, 4 * m)
        h = theta.components[r % (2 * m)]
        if e not in h:
            raise PrecisionError(f"component {r % (2 * m)} lacks exponent {e}")
        tab[(n, r)] = h[e]
    return JacExp(theta.k, m, theta.prec, tab, partial=partial)


def is_cuspidal(phi: JacExp) -> bool:
    """True iff every stored degenerate coefficient (4mn = r^2) vanishes."""
    return all(v == 0 for _, v in phi.items(degenerate_only=True))
