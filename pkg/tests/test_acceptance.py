"""Acceptance gate: one pass/fail line per criterion, printed at the end of the run."""

from __future__ import annotations

import time

import numpy as np
import pytest
from conftest import ACCEPTANCE
from sympy import isprime

from petersson import suites
from petersson.arith import count_sqrt_zero, fundamental_split, g_k, g_k_product, psi_direct, psi_seq
from petersson.lattice import saha_sequence


def _gate(num: int, text: str, budget: float | None = None):
    """Time a check, record its verdict, then assert on it."""

    def run(fn):
        start = time.perf_counter()
        ok, detail = False, ""
        try:
            ok, detail = fn()
        finally:
            elapsed = time.perf_counter() - start
            in_time = budget is None or elapsed <= budget
            suffix = f" ({elapsed:.1f}s" + (f", budget {budget:.0f}s" if budget else "") + ")"
            ACCEPTANCE[num] = (bool(ok) and in_time, text + suffix + (f": {detail}" if detail and not ok else ""))
        assert ok, detail
        assert in_time, f"took {elapsed:.1f}s, budget {budget}s"

    return run


def _suite(name: str, **kwargs):
    def fn():
        report = suites.run(name, **kwargs)
        failing = [c for c in report["checks"] if not c["ok"]]
        return report["ok"], failing[0] if failing else ""

    return fn


def test_01_weight4_exact():
    _gate(1, "A(E8,T) = c_4^-1 M(E8,T) = a_2^4(T) for reduced T, det(2T) <= 64", budget=120)(
        _suite("repno", lattice="E8", det2_max=64)
    )


def test_02_weight8_exact():
    _gate(2, "A(E8+E8,T) = A(D16+,T) = a_2^8(T) for reduced T, n <= 3, m <= 2", budget=600)(
        _suite("hauptsatz", n_max=3, m_max=2)
    )


def test_03_three_routes():
    _gate(3, "three constructions of the Eisenstein part agree, f = Delta, m <= 12, n < 20")(
        _suite("routes", k=12, m_max=12, prec=20)
    )


def test_04_degenerate_law():
    _gate(4, "degenerate coefficients of the Eisenstein part, m in {4, 8, 9, 12}")(
        _suite("degenerate", k=12, ms=(4, 8, 9, 12))
    )


def test_05_moebius_primitive_count():
    _gate(5, "Moebius sum = direct primitive count on E8, det(2T) <= 64")(_suite("saviour", det2_max=64))


def test_06_hecke_consistency():
    _gate(6, "phi-chain closed forms (m <= 36), phi4 proportional to E_k1, ratio bound (q1, q2 <= 20)")(
        _suite("hecke", ks=(8, 12), m_max=36, q_max=20, full_m_max=36)
    )


def test_07_dirichlet():
    _gate(7, "Dirichlet identity to N = 500 for k in {8, 10, 12}; V*V eigenvalue for N <= 8")(
        _suite("dirichlet", ks=(8, 10, 12), N_max=500, composed_N=8)
    )


def test_08_differential_operators():
    def fn():
        from petersson.diffop import run_suite

        rep = run_suite(bits=256, points=20, ks=(0, 2, 4))
        needed = ("phi1_decomposition", "maass_D0_vanishes", "residual_kernel")
        checks = rep["checks"]
        bad = [n for n in needed if not (checks[n]["ok"] and checks[n]["tolerance"] <= 1e-25)]
        bad += [n for n, c in checks.items() if not c["ok"]]
        return not bad, {n: checks[n] for n in bad}

    _gate(8, "Phi_1 identity, D_0 = 0 and residual kernel to 1e-25 at 256 bits", budget=60)(fn)


def test_09_arithmetic_functions():
    def fn():
        X = 10**4
        for k in (4, 8, 12):
            bad = next((m for m in range(1, X + 1) if g_k(k, m) != g_k_product(k, m)), None)
            if bad:
                return False, f"g_{k}({bad})"
        for x in range(1, X + 1):
            s = np.arange(2 * x, dtype=np.int64)
            brute = int(np.count_nonzero((s * s) % (4 * x) == 0))
            x1 = max(d for d in range(1, int(x**0.5) + 1) if x % (d * d) == 0)
            if not count_sqrt_zero(x) == brute == x1:
                return False, f"N({x})"
        seq = psi_seq(X)
        bad = next((n for n in range(1, X + 1) if seq[n] != psi_direct(n)), None)
        return bad is None, f"psi({bad})"

    _gate(9, "g_k sum = product (m <= 1e4); N(x) = x_1 (x <= 1e4); psi two ways (n <= 1e4)")(fn)


def test_10_saha_sequence():
    ms = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]

    def fn():
        start = time.perf_counter()
        forms = saha_sequence(ms)
        elapsed = time.perf_counter() - start
        D = [T.det2 for T in forms]
        ok = (
            elapsed < 1.0
            and len(forms) == len(ms)
            and all(a < b for a, b in zip(D, D[1:]))
            and all(isprime(d) and -d % 4 == 1 and fundamental_split(-d) == (-d, 1) for d in D)
            and all(T.n > T.m == m and T.r == 1 for T, m in zip(forms, ms))
        )
        return ok, f"{elapsed:.3f}s, D = {D}"

    _gate(10, "saha sequence: increasing prime fundamental discriminants for 10 inputs in < 1s", budget=1.0)(fn)


def test_11_properties():
    import test_properties as props

    tests = [
        props.test_U_output_invariants,
        props.test_V_output_invariants,
        props.test_U_composition,
        props.test_U_V_commute,
        props.test_fourier_jacobi_inverse_is_identity,
        props.test_a2k_depends_on_class_only,
    ]

    def fn():
        for t in tests:
            try:
                t()
            except Exception as exc:  # hypothesis re-raises the falsifying example
                return False, f"{t.__name__}: {exc!r}"
        return True, ""

    _gate(11, "operator outputs keep JacExp invariants; FJ inverse round trip; a2k class function; U/V laws")(fn)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
