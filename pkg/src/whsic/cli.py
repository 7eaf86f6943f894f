"""Command line interface.

Every subcommand prints a JSON document with sorted keys on stdout. Exit
status is 0 on pass/success, 1 on a verification failure and 2 on a usage
or input error.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import io
from .clifford import apply_word, parse_word
from .d3family import (
    BRANCHES,
    FamilyPoint,
    family_overlaps,
    plot_deltoid,
    proposition_check,
    sample_family,
    triple_sum,
)
from .fourier_order import order_sign, verify_L_order, verify_T_order
from .overlaps import check_conditions, frame_potential, overlaps_from_fiducial, potential_bound
from .search import SearchConfig, sic_search
from .symbols import (
    hermitian_symbol_check,
    invariant_product_check,
    rank_one_criterion,
    riesz_check,
    symbols_from_table,
)
from .validation import ZeroCoordinateError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _emit(obj):
    sys.stdout.write(io.dumps(obj) + "\n")


def _read(path):
    if not os.path.isfile(path) or not os.access(path, os.R_OK):
        raise InputError(f"cannot read {path}")
    try:
        return io.load_json(path)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _load_table(path):
    try:
        return io.table_from_json(_read(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not an overlap table ({exc})")


def _load_fiducial(path):
    try:
        return io.fiducial_from_json(_read(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not a fiducial ({exc})")


def _d_range(text):
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if lo < 2 or hi < lo:
        raise argparse.ArgumentTypeError("need 2 <= LO <= HI")
    return range(lo, hi + 1)


def _dimension(text):
    d = int(text)
    if d < 2:
        raise argparse.ArgumentTypeError("dimension must be at least 2")
    return d


def _symbol_residuals(c):
    try:
        passed, residual = rank_one_criterion(c)
    except ZeroCoordinateError:
        passed, residual = False, float("inf")
    return {
        "hermitian_symbol": hermitian_symbol_check(c),
        "riesz": riesz_check(c),
        "invariant_product": invariant_product_check(c),
        "rank_one": residual,
        "rank_one_passed": passed,
    }


def cmd_verify_fiducial(args):
    v = _load_fiducial(args.file)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-9:
        raise InputError(f"{args.file}: fiducial has norm {norm!r}, expected 1")
    c = overlaps_from_fiducial(v)
    report = check_conditions(c, tol=args.tol)
    out = report.to_dict()
    out["potential_gap"] = frame_potential(v) - potential_bound(v.shape[0])
    out["d"] = v.shape[0]
    if args.csv:
        io.write_report_csv(args.csv, out)
    _emit(out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_overlaps(args):
    c = _load_table(args.file)
    report = check_conditions(c, tol=args.tol)
    out = report.to_dict()
    out.update(_symbol_residuals(c))
    out["d"] = c.shape[0]
    if args.csv:
        io.write_report_csv(args.csv, out)
    _emit(out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_search(args):
    cfg = SearchConfig(
        dim=args.d,
        max_restarts=args.restarts,
        max_iters=args.max_iters,
        target_gap=args.target_gap,
        rng_seed=args.seed,
        restrict_zauner=args.zauner,
        objective=args.objective,
    )
    report = sic_search(cfg)
    if args.emit_fiducial:
        io.write_json(args.emit_fiducial, io.fiducial_to_json(report.fiducial))
    _emit(report.to_dict())
    return EXIT_OK if report.success else EXIT_FAIL


def cmd_d3_family(args):
    if args.plot:
        points = sample_family(args.samples, args.seed, branch=args.branch)
        sums = [triple_sum(family_overlaps(p)) for p in points]
        plot_deltoid(args.plot, sums)
        _emit({"plot": args.plot, "samples": len(sums)})
        return EXIT_OK
    point = FamilyPoint.from_angles(args.phi, args.z20_arg, args.branch)
    if args.admissible:
        point = point.snapped()
    c = family_overlaps(point)
    report = check_conditions(c)
    out = io.table_to_json(c)
    out["point"] = {"phi": point.phi, "z20": point.z20, "branch": point.branch}
    out["verification"] = report.to_dict()
    out["proposition"] = proposition_check(c).to_dict()
    _emit(out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_order_check(args):
    results = []
    ok = True
    for d in args.d_range:
        sign, t_res = verify_T_order(d)
        l_res = verify_L_order(d)
        ok &= t_res <= args.tol and l_res <= args.tol and sign == order_sign(d)
        results.append({"d": d, "sign": sign, "T_residual": t_res, "L_residual": l_res})
    _emit({"results": results, "signs": [r["sign"] for r in results], "tol": args.tol})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_clifford_orbit(args):
    c = _load_table(args.file)
    try:
        gens = parse_word(args.word)
    except ValueError as exc:
        raise InputError(str(exc))
    steps = [c]
    for gen in gens:
        steps.append(apply_word(steps[-1], [gen]))
    report = check_conditions(steps[-1])
    _emit({
        "d": c.shape[0],
        "word": args.word,
        "steps": [io.complex_to_json(s) for s in steps],
        "image": io.table_to_json(steps[-1]),
        "verification": report.to_dict(),
    })
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_symbols(args):
    c = _load_table(args.file)
    out = {"d": c.shape[0], "symbols": symbols_from_table(c)}
    out.update(_symbol_residuals(c))
    _emit(out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="whsic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-fiducial", help="certify a fiducial vector file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--csv", help="also write the report as CSV")
    p.set_defaults(func=cmd_verify_fiducial)

    p = sub.add_parser("verify-overlaps", help="certify an overlap table file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--csv", help="also write the report as CSV")
    p.set_defaults(func=cmd_verify_overlaps)

    p = sub.add_parser("search", help="numerical fiducial search")
    p.add_argument("--d", type=_dimension, required=True)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--max-iters", type=int, default=500)
    p.add_argument("--target-gap", type=float, default=1e-11)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zauner", action="store_true", help="restrict to a Zauner eigenspace")
    p.add_argument("--objective", choices=("potential", "quartic"), default="potential")
    p.add_argument("--emit-fiducial", metavar="PATH")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("d3-family", help="overlap tables of the d=3 family")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--z20-arg", type=float, default=0.0)
    p.add_argument("--branch", choices=BRANCHES, default="z1=z3")
    p.add_argument("--admissible", action="store_true",
                   help="snap z20 to the nearest value allowed by the product invariant")
    p.add_argument("--plot", metavar="SVG", help="write the deltoid with sampled family sums")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_d3_family)

    p = sub.add_parser("order-check", help="verify the finite-order identities for T and L")
    p.add_argument("--d-range", type=_d_range, default=_d_range("2..8"))
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_order_check)

    p = sub.add_parser("clifford-orbit", help="apply a Clifford generator word to a table")
    p.add_argument("file")
    p.add_argument("--word", required=True, help='e.g. "S1O0 F Z Z"')
    p.set_defaults(func=cmd_clifford_orbit)

    p = sub.add_parser("symbols", help="dump the symbol table and its residuals")
    p.add_argument("file")
    p.set_defaults(func=cmd_symbols)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"whsic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
