"""Verification suites shared by the command line and the acceptance tests.

Each suite returns ``{"suite": name, "ok": bool, "checks": [...]}`` where
every check records how many cases it ran and the first failing case.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable

from .arith import rat_str
from .dirichlet import vnstar_vn_composed, vnstar_vn_eigen, verify_Z_identity
from .eigen import (
    EIGEN_RATIO_CONSTANT,
    chain,
    factor_pairs,
    phi4_proportional,
    phi_chain_closed,
    ratio_scan,
)
from .klingen import ROUTES, degenerate_law, script_E_via_E2e
from .lattice import (
    BinQF,
    a2k,
    a2k_maass,
    builtin,
    mass_weights,
    hauptsatz_check,
    reduced_forms,
    rep_number,
    rep_sharp,
    rep_sharp_direct,
    repno_report,
)
from .qexp import cusp_basis

__all__ = ["SUITES", "run", "Check"]


class Check:
    """Counts cases and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.first_counterexample = None

    def record(self, ok: bool, case) -> None:
        self.cases += 1
        if not ok and self.first_counterexample is None:
            self.first_counterexample = case

    @property
    def ok(self) -> bool:
        return self.first_counterexample is None

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "cases": self.cases, "first_counterexample": self.first_counterexample}


def _result(name: str, checks: Iterable[Check], **extra) -> dict:
    checks = [c.to_dict() for c in checks]
    return {"suite": name, "ok": all(c["ok"] for c in checks), "checks": checks, **extra}


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    """Order-preserving map, over a process pool when jobs > 1."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _tq(T: BinQF) -> list[int]:
    return [T.n, T.r, T.m]


# ---------------------------------------------------------------------------


def degenerate(k: int = 12, ms: Iterable[int] = (4, 8, 9, 12)) -> dict:
    """Degenerate coefficients of the Eisenstein part against the closed law."""
    ms = sorted(set(ms))
    f = cusp_basis(k, max(ms) + 1)[0]
    chk = Check("degenerate_law")
    for m in ms:
        phi = script_E_via_E2e(f, m, m + 1)
        for r in range(2 * m):
            if (r * r) % (4 * m):
                continue
            got, want = phi[r * r // (4 * m), r], degenerate_law(f, m, r)
            chk.record(got == want, {"m": m, "r": r, "coefficient": rat_str(got), "law": rat_str(want)})
    return _result("degenerate", [chk], k=k)


def routes(k: int = 12, m_max: int = 12, prec: int = 20) -> dict:
    """The three constructions of the Eisenstein part agree coefficient by coefficient."""
    basis = cusp_basis(k, m_max + 1)
    if not basis:
        raise ValueError(f"no cusp forms of weight {k}")
    f = basis[0]
    chk = Check("three_routes")
    for m in range(1, m_max + 1):
        first, *rest = (build(f, m, prec) for build in ROUTES.values())
        for name, other in zip(list(ROUTES)[1:], rest):
            bad = next(((nr, first[nr], other[nr]) for nr, _ in first.items() if first[nr] != other[nr]), None)
            chk.record(
                bad is None,
                None if bad is None else {"m": m, "route": name, "nr": list(bad[0]), "values": [rat_str(bad[1]), rat_str(bad[2])]},
            )
    return _result("routes", [chk], k=k, m_max=m_max, prec=prec)


def hecke(ks: Iterable[int] = (8, 12), m_max: int = 36, q_max: int = 20, full_m_max: int = 36) -> dict:
    """phi-chain closed forms, proportionality of phi4, and the eigenvalue ratio scan."""
    closed, prop, bound = Check("closed_forms"), Check("phi4_proportional"), Check("ratio_bound")
    worst = {}
    for k in ks:
        for m in range(1, m_max + 1):
            pairs = factor_pairs(m)
            for q1, l1 in pairs:
                for q2, l2 in pairs:
                    phis = chain(k, q1, l1, q2, l2)
                    for r in range(0, 2 * m, 2):
                        got = tuple(Fraction(0) if (r * r) % (4 * p.m) else p.coeff_disc(0, r) for p in phis)
                        want = phi_chain_closed(k, q1, l1, q2, l2, r)
                        closed.record(got == want, {"k": k, "q1": q1, "l1": l1, "q2": q2, "l2": l2, "r": r})
                    if m <= full_m_max:
                        prop.record(phi4_proportional(k, q1, l1, q2, l2), {"k": k, "q1": q1, "l1": l1, "q2": q2, "l2": l2})
        rows = ratio_scan(k, q_max)
        for row in rows:
            bound.record(row.ratio <= EIGEN_RATIO_CONSTANT, row.to_dict())
        worst[str(k)] = max(row.ratio for row in rows)
    return _result("hecke", [closed, prop, bound], constant=EIGEN_RATIO_CONSTANT, max_ratio=worst)


def _saviour_case(T: BinQF) -> tuple[int, int]:
    return rep_sharp("E8", T), rep_sharp_direct("E8", T)


def saviour_forms(det2_max: int) -> list[BinQF]:
    """Positive forms (n, r, m) with |r| <= min(n, m) and det(2T) <= det2_max."""
    # 4nm - r^2 >= 3 max(n, m) once |r| <= min(n, m)
    out = []
    bound = det2_max // 3
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            for r in range(-min(n, m), min(n, m) + 1):
                T = BinQF(n, r, m)
                if T.positive and T.det2 <= det2_max:
                    out.append(T)
    return out


def saviour(det2_max: int = 64, jobs: int = 1) -> dict:
    """Moebius-weighted count against the direct count of pairs with primitive second column."""
    forms = saviour_forms(det2_max)
    chk = Check("moebius_vs_direct")
    for T, (lhs, rhs) in zip(forms, _pmap(_saviour_case, forms, jobs)):
        chk.record(lhs == rhs, {"T": _tq(T), "moebius": lhs, "direct": rhs})
    return _result("saviour", [chk], det2_max=det2_max)


def _repno_case(args) -> dict:
    name, T = args
    row = repno_report(name, [T])[0]
    k = builtin(name).weight
    return {"T": _tq(T), "A": row.A, "main": row.main, "a2k": a2k(T, k), "maass": a2k_maass(T, k)}


def repno(lattice: str = "E8", det2_max: int = 64, jobs: int = 1) -> dict:
    """For rank 8: A(E8, T) = c_4^-1 M(E8, T) = a_2^4(T), with a_2^4 also from the Maass lift."""
    forms = reduced_forms(det2_max)
    rows = _pmap(_repno_case, [(lattice, T) for T in forms], jobs)
    main, sieg, maass = Check("A_equals_main_term"), Check("A_equals_a2k"), Check("a2k_equals_maass")
    for r in rows:
        case = {key: (rat_str(v) if isinstance(v, Fraction) else v) for key, v in r.items()}
        main.record(r["A"] == r["main"], case)
        sieg.record(r["A"] == r["a2k"], case)
        maass.record(r["a2k"] == r["maass"], case)
    return _result("repno", [main, sieg, maass], lattice=lattice, det2_max=det2_max)


RANK16 = (("E8xE8", 2 * 696729600**2), ("D16+", 2**15 * 20922789888000))


def rank16_forms(n_max: int = 3, m_max: int = 2) -> list[BinQF]:
    return [BinQF(n, r, m) for m in range(1, m_max + 1) for n in range(m, n_max + 1) for r in range(0, m + 1) if 4 * n * m > r * r]


def _rank16_case(T: BinQF) -> tuple[int, int, Fraction]:
    return rep_number("E8xE8", T), rep_number("D16+", T), a2k(T, 8)


def hauptsatz(n_max: int = 3, m_max: int = 2, jobs: int = 1) -> dict:
    """Both rank-16 lattices represent T as often as a_2^8(T) and as c_8^-1 M(S, T),
so their mass average does too."""
    forms = rank16_forms(n_max, m_max)
    each = Check("A_equals_a2k")
    for T, (a, b, c) in zip(forms, _pmap(_rank16_case, forms, jobs)):
        each.record(a == c and b == c, {"T": _tq(T), "E8xE8": a, "D16+": b, "a2k": rat_str(c)})
    main = Check("A_equals_main_term")
    for name, _ in RANK16:
        for row in repno_report(name, forms):
            main.record(row.diff == 0, {"lattice": name, "T": _tq(row.T), "A": row.A, "main": rat_str(row.main)})
    weights = mass_weights([order for _, order in RANK16])
    genus = [(name, w) for (name, _), w in zip(RANK16, weights)]
    avg = Check("mass_average")
    report = hauptsatz_check(genus, 8, forms)
    for row in report["rows"]:
        avg.record(row["ok"], row)
    return _result("hauptsatz", [each, main, avg], weights=[rat_str(w) for w in weights])


def dirichlet(ks: Iterable[int] = (8, 10, 12), N_max: int = 500, composed_N: int = 8) -> dict:
    """Coefficientwise Dirichlet identity, the eigenvalue against composed operators,
    and a deliberately wrong eigenvalue that must be caught."""
    ident, eig, control = Check("Z_identity"), Check("composed_eigenvalue"), Check("mutation_detected")
    for k in ks:
        rep = verify_Z_identity(k, N_max)
        ident.record(rep["ok"], rep)
        for N in range(1, composed_N + 1):
            lam, prop = vnstar_vn_composed(k, N)
            want = vnstar_vn_eigen(k, N)
            eig.record(prop and lam == want, {"k": k, "N": N, "composed": rat_str(lam), "formula": rat_str(want), "proportional": prop})
        bad = verify_Z_identity(k, min(N_max, 50), psi_exponent=k - 1)
        control.record(not bad["ok"], {"k": k})
    return _result("dirichlet", [ident, eig, control], N_max=N_max)


def diffop(bits: int = 256) -> dict:
    from .diffop import run_suite

    rep = run_suite(bits=bits)
    checks = []
    for name, r in sorted(rep["checks"].items()):
        c = Check(name)
        c.cases = r["points"]
        if not r["ok"]:
            c.first_counterexample = r
        checks.append(c)
    return _result("diffop", checks, bits=bits, details=rep["checks"])


SUITES: dict[str, Callable[..., dict]] = {
    "degenerate": degenerate,
    "routes": routes,
    "hecke": hecke,
    "saviour": saviour,
    "hauptsatz": hauptsatz,
    "repno": repno,
    "dirichlet": dirichlet,
    "diffop": diffop,
}


def run(name: str, **kwargs) -> dict:
    """Run one suite, or every suite for ``all``; keyword arguments a suite does not take are dropped."""
    import inspect

    if name == "all":
        results = [run(n, **kwargs) for n in SUITES]
        return {"suite": "all", "ok": all(r["ok"] for r in results), "results": results}
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    accepted = inspect.signature(fn).parameters
    return fn(**{k: v for k, v in kwargs.items() if k in accepted and v is not None})
