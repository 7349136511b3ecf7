"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 precision error, 4 resource cap reached.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import cache
from .errors import LatticeError, PrecisionError, ResourceCapError
from .jacobi import jac_eis_m
from .lattice import BinQF, LatticeGram, builtin, reduced_forms, repno_csv, repno_report, saha_sequence
from .suites import SUITES, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION, EXIT_CAP = 0, 1, 2, 3, 4

log = logging.getLogger("petersson")


class UsageError(ValueError):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _form(text: str) -> BinQF:
    try:
        n, r, m = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,r,m, got {text!r}") from None
    return BinQF(n, r, m)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="write the result here instead of stdout")
    common.add_argument("--cache", help="cache file for Bernoulli numbers and Cohen H values (overridden by $PETERSSON_CACHE)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="petersson", description="Exact Jacobi/Siegel Eisenstein computations and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    je = sub.add_parser("jacobi-eis", parents=[common], help="Fourier expansion of E_{k,m} as JSON")
    je.add_argument("--k", type=int, required=True)
    je.add_argument("--m", type=_positive, default=1)
    je.add_argument("--prec", type=_positive, default=5)

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("suite", help=f"one of {', '.join([*SUITES, 'all'])}")
    ve.add_argument("--k", type=int)
    ve.add_argument("--m-max", type=_positive)
    ve.add_argument("--prec", type=_positive)
    ve.add_argument("--bits", type=_positive)
    ve.add_argument("--lattice", help="built-in lattice name for the repno suite")
    ve.add_argument("--det-max", type=_positive, help="det(2T) bound for lattice suites")

    rn = sub.add_parser("repnum", parents=[common], help="representation numbers against the main term, as CSV")
    rn.add_argument("--lattice", default="E8", help="built-in name (E8, E8xE8, D16+) or a lattice JSON file")
    rn.add_argument("--T", dest="forms", type=_form, action="append", help="form n,r,m (repeatable)")
    rn.add_argument("--det-max", type=_positive, help="scan all reduced forms with det(2T) up to this bound")

    sa = sub.add_parser("saha", parents=[common], help="increasing prime discriminants 4 m n - 1")
    sa.add_argument("m", nargs="*", type=_positive)
    sa.add_argument("--cap", type=_positive, default=10**6, help="search steps allowed per m")
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _load_lattice(source: str) -> LatticeGram:
    path = Path(source)
    if path.is_file():
        return LatticeGram.from_json(path.read_text(encoding="utf-8"), name=path.stem)
    try:
        return builtin(source)
    except KeyError:
        raise UsageError(f"unknown lattice {source!r}") from None


def cmd_jacobi_eis(args) -> int:
    if args.k < 4 or args.k % 2:
        raise UsageError("k must be even and >= 4")
    _emit(jac_eis_m(args.k, args.m, args.prec).to_json(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.k is not None and (args.k < 4 or args.k % 2):
        raise UsageError("k must be even and >= 4")
    kwargs = {
        "k": args.k,
        "ks": (args.k,) if args.k is not None else None,
        "m_max": args.m_max,
        "prec": args.prec,
        "bits": args.bits,
        "jobs": args.jobs,
        "lattice": args.lattice,
        "det2_max": args.det_max,
    }
    if args.lattice is not None:
        _load_lattice(args.lattice)
    report = run(args.suite, **kwargs)
    _emit(_dumps(report), args.out)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_repnum(args) -> int:
    L = _load_lattice(args.lattice)
    forms = list(args.forms or [])
    if args.det_max:
        forms += reduced_forms(args.det_max)
    if not forms:
        raise UsageError("give --T or --det-max")
    bad = [T for T in forms if not (T.positive and T.is_reduced())]
    if bad:
        raise UsageError(f"{bad[0]} is not a positive reduced form")
    _emit(repno_csv(repno_report(L, sorted(set(forms)))), args.out)
    return EXIT_OK


def cmd_saha(args) -> int:
    try:
        forms = saha_sequence(args.m, cap=args.cap)
    except ResourceCapError as exc:
        _emit(_dumps([[T.n, T.r, T.m, -T.det2] for T in exc.partial]), args.out)
        log.error("%s", exc)
        return EXIT_CAP
    _emit(_dumps([[T.n, T.r, T.m, -T.det2] for T in forms]), args.out)
    return EXIT_OK


COMMANDS = {"jacobi-eis": cmd_jacobi_eis, "verify": cmd_verify, "repnum": cmd_repnum, "saha": cmd_saha}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    path = cache.resolve_path(args.cache)
    if path is not None:
        cache.attach(path)
    try:
        return COMMANDS[args.command](args)
    except PrecisionError as exc:
        log.error("precision: %s", exc)
        return EXIT_PRECISION
    except ResourceCapError as exc:
        log.error("%s", exc)
        return EXIT_CAP
    except (UsageError, LatticeError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
