"""Command-line interface: ``python -m sumsets <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad
input.  Output is deterministic for a given command line.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .natset import ParseError, format_natset, kfold, parse_natset, sumset
from .nathanson import StructureError, iter_scan_rows, rows_to_csv, scan_row
from .numsgp import atoms_of, monoid_report
from .powmon import (
    GuardError,
    RecoveryError,
    find_scaling_iso,
    gallery_report,
    lemma22_minimal_h,
    lift,
    recover_scaling,
    scaling,
)
from .qset import as_fraction, format_fraction, parse_qset, parse_rationals

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class VerificationFailure(Exception):
    pass


def _exact(f: Fraction):
    return f.numerator if f.denominator == 1 else format_fraction(f)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        raise ValueError("--format csv is only available for nathanson and bounds-scan")
    else:
        print(text)


def cmd_sumset(args) -> None:
    X, Y = parse_natset(args.X), parse_natset(args.Y)
    Z = sumset(X, Y, backend=args.backend)
    _emit(args, {"set": list(Z.elements)}, format_natset(Z))


def cmd_kfold(args) -> None:
    X = parse_natset(args.X)
    if args.k < 0:
        raise ValueError("k must be non-negative")
    Z = kfold(X, args.k, backend=args.backend)
    _emit(args, {"set": list(Z.elements)}, format_natset(Z))


def _row_text(row: dict) -> str:
    fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
    return (
        f"A={fmt(row['set'])} b={row['b']} B={fmt(row['B'])} c={row['c']} C={fmt(row['C'])} "
        f"k_star={row['k_star']} gw_bound={row['gw_bound']} a2n_bound={row['a2n_bound']} "
        f"gw_ok={'true' if row['gw_ok'] else 'false'}"
    )


def _print_row(args, row: dict, first: bool) -> None:
    if args.format == "json":
        print(json.dumps(row))
    elif args.format == "csv":
        sys.stdout.write(rows_to_csv([row], header=first))
    else:
        print(_row_text(row))


def cmd_nathanson(args) -> None:
    A = parse_natset(args.A)
    row = scan_row(A)
    _print_row(args, row, True)
    if args.strict and not row["gw_ok"]:
        raise VerificationFailure(f"k_star {row['k_star']} exceeds a-n+1 = {row['gw_bound']}")


def cmd_bounds_scan(args) -> None:
    if args.max_a < 1:
        raise ValueError("--max-a must be at least 1")
    failures, anomalies = 0, 0
    first = True
    for row in iter_scan_rows(args.max_a, args.start, args.stop, args.workers):
        if isinstance(row, str):
            print(f"FAILURE: {row}", file=sys.stderr)
            failures += 1
            continue
        if not row["gw_ok"]:
            anomalies += 1
            print(f"warning: k_star above a-n+1 for {row['set']}", file=sys.stderr)
        _print_row(args, row, first)
        first = False
        sys.stdout.flush()
    if failures or (args.strict and anomalies):
        raise VerificationFailure(f"{failures} failures, {anomalies} bound anomalies")


def cmd_stabilize(args) -> None:
    A = parse_qset(args.A)
    try:
        report = lemma22_minimal_h(A, window=args.window)
    except StructureError as exc:
        raise VerificationFailure(str(exc)) from exc
    payload = report.to_json()
    _emit(
        args,
        payload,
        f"A={A} h_min={report.h_min} threshold={report.threshold} window={report.window_checked}",
    )


def cmd_monoid(args) -> None:
    rep = monoid_report(parse_rationals(args.gens))
    lines = [f"atoms: {','.join(map(str, rep['atoms']))}"]
    if rep["frobenius"] is not None:
        lines.append(f"frobenius: {rep['frobenius']}")
        lines.append(f"gaps: {','.join(map(str, rep['gaps']))}")
    _emit(args, rep, "\n".join(lines))


def cmd_iso(args) -> None:
    S1 = atoms_of(parse_rationals(args.S1))
    S2 = atoms_of(parse_rationals(args.S2))
    q = find_scaling_iso(S1, S2)
    _emit(args, {"q": None if q is None else _exact(q)}, "none" if q is None else format_fraction(q))


def cmd_recover(args) -> None:
    S = atoms_of(parse_rationals(args.gens))
    q = as_fraction(args.q)
    f = scaling(q, S)
    rng = random.Random(args.seed)
    probes = list(S.atoms)
    for _ in range(args.samples):
        probes.append(sum(rng.randint(0, 3) * a for a in S.atoms) or S.atoms[0])
    try:
        got = recover_scaling(lift(f), probes)
    except RecoveryError as exc:
        raise VerificationFailure(str(exc)) from exc
    if got != q:
        raise VerificationFailure(f"recovered {got}, expected {q}")
    _emit(
        args,
        {"q": _exact(q), "recovered": _exact(got), "probes": [_exact(p) for p in probes]},
        format_fraction(got),
    )


def cmd_gallery(args) -> None:
    vs = args.v or [1, 2, 3]
    for v in vs:
        rep = gallery_report(v)
        if args.format == "json":
            print(json.dumps(rep))
        elif args.format == "csv":
            raise ValueError("--format csv is only available for nathanson and bounds-scan")
        else:
            print(
                f"v={v} fpm_equal={'true' if rep['fpm_equal'] else 'false'} "
                f"isomorphic={'true' if rep['isomorphic'] else 'false'}"
            )
        if not rep["fpm_equal"] or rep["isomorphic"] != (v <= 1):
            raise VerificationFailure(f"gallery check failed for v={v}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    common.add_argument("--strict", action="store_true", help="treat bound anomalies as failures")

    parser = argparse.ArgumentParser(prog="sumsets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", parents=[common], help="X + Y")
    p.add_argument("X")
    p.add_argument("Y")
    p.add_argument("--backend", choices=("bits", "sorted"), default="bits")
    p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("kfold", parents=[common], help="k-fold sum kX")
    p.add_argument("X")
    p.add_argument("k", type=int)
    p.add_argument("--backend", choices=("bits", "sorted"), default="bits")
    p.set_defaults(func=cmd_kfold)

    p = sub.add_parser("nathanson", parents=[common], help="eventual structure of kA")
    p.add_argument("A")
    p.set_defaults(func=cmd_nathanson)

    p = sub.add_parser("bounds-scan", parents=[common], help="k_star against a-n+1 and a^2 n")
    p.add_argument("--max-a", type=int, required=True)
    p.add_argument("--from", dest="start", type=int, default=0, help="first row index")
    p.add_argument("--to", dest="stop", type=int, default=None, help="stop before this row index")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bounds_scan)

    p = sub.add_parser("stabilize", parents=[common], help="least h with (k+1)A = kA + {0, max A}")
    p.add_argument("A")
    p.add_argument("--window", type=int, default=50)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("monoid", parents=[common], help="atoms, Frobenius number and gaps")
    p.add_argument("gens")
    p.set_defaults(func=cmd_monoid)

    p = sub.add_parser("iso", parents=[common], help="scaling isomorphism between two monoids")
    p.add_argument("S1")
    p.add_argument("S2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("recover", parents=[common], help="recover q from the lift of x -> qx")
    p.add_argument("gens")
    p.add_argument("--q", required=True)
    p.add_argument("--samples", type=int, default=5, help="random extra probes")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("gallery", parents=[common], help="left-zero unitization vs its opposite")
    p.add_argument("--v", type=int, action="append")
    p.set_defaults(func=cmd_gallery)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, ValueError, TypeError, GuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
