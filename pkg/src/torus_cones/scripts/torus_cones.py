# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""torus-cones: reports, domain scans, verification suites and polyhedron
export for spherical cone-manifolds on torus knots and links.

Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.
"""

import argparse
import json
import sys
from pathlib import Path

from torus_cones import parameters as _params
from torus_cones.angles import format_angle, parse_angle
from torus_cones.errors import ConeManifoldError, DomainError
from torus_cones.geometry.cones import KnotCone, LinkCone
from torus_cones.geometry.export import save_polyhedron
from torus_cones.geometry.polyhedron import build_polyhedron
from torus_cones.logging import error, info
from torus_cones.reports.records import ScanGrid, build_report, scan, write_scan_csv
from torus_cones.reports.suites import SCOPES, run_verification

EXIT_PASS, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

FAULT_PERTURBATION = 1e-3


def _add_cone_arguments(parser, angles=True):
    parser.add_argument("kind", choices=["knot", "link"], help="torus knot t(2n+1,2) or link t(2n,2)")
    parser.add_argument("--n", type=int, required=True, help="knot/link index n")
    if angles:
        parser.add_argument("--alpha", type=parse_angle, required=True, help="cone angle, e.g. pi or 3pi/5")
        parser.add_argument("--beta", type=parse_angle, help="second cone angle (links)")
        parser.add_argument("--force", action="store_true", help="build outside the domain; results are unverified")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torus-cones", description=__doc__.split("\n\n")[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    report = subparsers.add_parser("report", help="closed-form values and verification for one cone")
    _add_cone_arguments(report)
    report.add_argument("--tol", type=float, help="tolerance for the properness claims")
    report.add_argument("--json", type=Path, help="also write the report as JSON")

    scan_parser = subparsers.add_parser("scan", help="tabulate a grid of cone angles as CSV")
    _add_cone_arguments(scan_parser, angles=False)
    scan_parser.add_argument("--grid", type=int, default=50, help="points per angle axis")
    scan_parser.add_argument("--margin", type=float, default=1e-3, help="distance kept from domain boundaries")
    scan_parser.add_argument("--alpha-range", type=parse_angle, nargs=2, metavar=("LO", "HI"))
    scan_parser.add_argument("--beta-range", type=parse_angle, nargs=2, metavar=("LO", "HI"))
    scan_parser.add_argument("--tol", type=float, help="tolerance for the properness claims")
    scan_parser.add_argument("--workers", type=int, default=1, help="worker processes")
    scan_parser.add_argument("--out", type=Path, required=True, help="CSV output path")

    verify = subparsers.add_parser("verify", help="run the verification suites")
    verify.add_argument("--scope", choices=SCOPES, default="all")
    verify.add_argument("--max-n", type=int, default=4)
    verify.add_argument("--grid", type=int, default=25, help="cone angles per knot interval")
    verify.add_argument("--tol", type=float, default=1e-8, help="tolerance for the properness claims")
    verify.add_argument("--workers", type=int, default=1, help="worker processes")
    verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    export = subparsers.add_parser("export", help="write a fundamental polyhedron as JSON")
    _add_cone_arguments(export)
    export.add_argument("--out", type=Path, required=True, help="JSON output path")
    return parser


def _cone(args, parser):
    if args.kind == "knot":
        if args.beta is not None:
            parser.error("--beta applies to links only")
        return KnotCone(args.n, args.alpha)
    if args.beta is None:
        parser.error("links need --beta")
    return LinkCone(args.n, args.alpha, args.beta)


def _show(value) -> str:
    if value is None:
        return "-"
    pi_form = format_angle(value, exact=False)
    if "pi" in pi_form:
        return f"{value:.17g} ({pi_form})"
    return f"{value:.17g}"


def _print_report(record):
    angles = [record.alpha] + ([record.beta] if record.beta is not None else [])
    name = f"t({2 * record.n + 1},2)" if record.kind == "knot" else f"t({2 * record.n},2)"
    print(f"{record.kind} {name}, cone angles {', '.join(format_angle(a, exact=False) for a in angles)}")
    print(f"  lambda           {record.lam:.17g}")
    print(f"  theta            {_show(record.theta)}")
    for label, length in zip(("l_alpha", "l_beta"), record.lengths):
        print(f"  {label:<16} {_show(length)}")
    for label, length in zip(("l_alpha (geom)", "l_beta (geom)"), record.geometric_lengths):
        print(f"  {label:<16} {length:.17g}")
    print(f"  volume           {_show(record.volume)}")
    print(f"  volume (Schlafli) {_show(record.schlafli_volume)}")
    for claim in record.claims:
        status = "pass" if claim.passed else "FAIL"
        print(f"  claim ({claim.claim})        {status}  max residual {claim.max_residual:.3e}")
    if not record.fan_proper:
        print("  NS fan           outside the proper region, claims (c)-(e) not expected")
    status = "pass" if record.passed else "FAIL"
    if not record.verified:
        status += " (unverified)"
    print(f"  status           {status}")


def cmd_report(args, parser) -> int:
    parameters = _params.default()
    if args.tol is not None:
        parameters["claim_tolerance"] = args.tol
    record = build_report(_cone(args, parser), parameters, force=args.force)
    _print_report(record)
    if args.json:
        with open(args.json, "w") as json_file:
            json.dump(record.to_json_dict(), json_file, indent=4)
        info(f"Wrote report to {args.json}")
    return EXIT_PASS if record.passed else EXIT_FAILURE


def cmd_scan(args, parser) -> int:
    parameters = _params.default()
    parameters["max_workers"] = args.workers
    if args.tol is not None:
        parameters["claim_tolerance"] = args.tol
    try:
        grid = ScanGrid(
            kind=args.kind,
            n=args.n,
            alpha_steps=args.grid,
            alpha_range=tuple(args.alpha_range) if args.alpha_range else None,
            beta_range=tuple(args.beta_range) if args.beta_range else None,
            margin=args.margin,
        )
    except ValueError as err:
        parser.error(str(err))
    records = scan(grid, parameters)
    write_scan_csv(records, args.out)
    inside = [record for record in records if record.in_domain]
    failed = [record for record in inside if not record.passed]
    print(f"{len(records)} points, {len(inside)} in domain, {len(failed)} failed")
    return EXIT_FAILURE if failed else EXIT_PASS


def cmd_verify(args, parser) -> int:
    if args.max_n < 1 or (args.scope == "link" and args.max_n < 2):
        parser.error("--max-n must be at least 1 (2 for links)")
    if args.grid < 1:
        parser.error("--grid must be positive")
    parameters = _params.default()
    parameters["max_workers"] = args.workers
    if args.inject_fault:
        parameters["lambda_perturbation"] = FAULT_PERTURBATION
    results = run_verification(args.scope, args.max_n, args.grid, args.tol, parameters)
    for result in results:
        status = "pass" if result.passed else "FAIL"
        print(f"{result.name:<20} {result.checks:>7} checks {result.failures:>6} failures  max residual {result.max_residual:.3e}  {status}")
    passed = all(result.passed for result in results)
    print("all suites pass" if passed else "verification FAILED")
    return EXIT_PASS if passed else EXIT_FAILURE


def cmd_export(args, parser) -> int:
    poly = build_polyhedron(_cone(args, parser), force=args.force)
    save_polyhedron(poly, args.out)
    print(f"{poly.size} vertices + 2 poles written to {args.out}")
    return EXIT_PASS


COMMANDS = {"report": cmd_report, "scan": cmd_scan, "verify": cmd_verify, "export": cmd_export}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except DomainError as err:
        error(str(err))
        print(f"error: domain violation: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ConeManifoldError as err:
        error(str(err))
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
