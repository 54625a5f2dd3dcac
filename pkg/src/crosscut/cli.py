"""Command-line front end.

Subcommands: construct, ratio, verify-identities, verify-bounds, scan-k,
explore.  Exit codes: 0 success, 1 verification failure, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import documents, polynomials, svgfig, verifier
from .construction import KParam, crosscut_figure
from .errors import CrosscutError, IdentityFailed, InputError
from .exact_geometry import CanonicalParams, canonical_quadrilateral, canonicalize
from .verifier import SampleSpec


def _fmt_points(points, limit: int = 4) -> str:
    fr = documents.format_rational
    shown = ", ".join(f"({fr(a)}, {fr(b)})" for a, b in points[:limit])
    more = len(points) - limit
    return shown + (f", +{more} more" if more > 0 else "")


def _add_sampling_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--grid-step", default="1/4", help="grid step (rational)")
    parser.add_argument("--box", default="2", help="sampling box edge (rational)")
    parser.add_argument("--random", type=int, default=200,
                        help="number of seeded random samples")
    parser.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    parser.add_argument("--denominator-bound", type=int, default=40,
                        help="max denominator of random rationals")


def _spec_from_args(args) -> SampleSpec:
    try:
        return SampleSpec(
            seed=args.seed,
            grid_step=documents.parse_rational(args.grid_step),
            box_max=documents.parse_rational(args.box),
            random_count=args.random,
            denominator_bound=args.denominator_bound,
        )
    except ValueError as exc:
        raise InputError(f"invalid sampling flags: {exc}")


def _parse_canonical(text: str) -> CanonicalParams:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--canonical expects 'a,b'")
    a = documents.parse_rational(parts[0])
    b = documents.parse_rational(parts[1])
    try:
        return CanonicalParams(a, b)
    except ValueError as exc:
        raise InputError(str(exc))


def _parse_k(text: str) -> Fraction:
    return documents.parse_rational(text)


def _parse_k_list(text: str) -> List[Fraction]:
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise InputError("--ks range form is from:to:step")
        start, stop, step = (documents.parse_rational(p) for p in parts)
        if step <= 0:
            raise InputError("--ks range step must be positive")
        out = []
        value = start
        while value <= stop:
            out.append(value)
            value += step
        return out
    return [documents.parse_rational(p) for p in text.split(",") if p.strip()]


def _write_json(doc, path: Optional[str]):
    payload = json.dumps(doc, indent=2)
    if path:
        with open(path, "w") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)


def _cmd_construct(args) -> int:
    quad = documents.load_quad_file(args.input)
    k = KParam.from_any(_parse_k(args.k))
    canonical = canonicalize(quad)
    figure = crosscut_figure(quad, k)
    doc = documents.figure_document(figure, canonical)
    if args.svg:
        with open(args.svg, "w") as handle:
            handle.write(svgfig.render_svg(figure))
    _write_json(doc, args.output)
    return 0


def _cmd_ratio(args) -> int:
    params = _parse_canonical(args.canonical)
    k = KParam.from_any(_parse_k(args.k))
    figure = crosscut_figure(canonical_quadrilateral(params), k)
    print(documents.format_rational(figure.ratio))
    return 0


def _cmd_verify_identities(args) -> int:
    checks = (
        ("ratio-identity", polynomials.check_ratio_identity),
        ("lower-factorization", polynomials.check_lower_identity),
        ("upper-factorization", polynomials.check_upper_identity),
        ("rewrites", polynomials.check_rewrites),
    )
    failed = False
    for name, check in checks:
        try:
            check()
        except IdentityFailed as exc:
            print(f"FAIL {name}: {exc}")
            failed = True
        else:
            print(f"PASS {name}")
    return 1 if failed else 0


def _cmd_verify_bounds(args) -> int:
    spec = _spec_from_args(args)
    k = _parse_k(args.k)
    if k <= 0:
        raise InputError(f"verify-bounds requires k > 0, got {k}")
    report = verifier.verify_bounds(spec, k)
    doc = documents.bounds_report_document(report)
    if args.json:
        _write_json(doc, args.json)
    fr = documents.format_rational
    print(
        f"k={fr(report.k)} bounds=[{fr(report.lower)}, {fr(report.upper)}] "
        f"samples={report.samples_checked} violations={len(report.violations)}"
    )
    print(
        f"min={fr(report.min_ratio)} at {_fmt_points(report.min_points)} "
        f"max={fr(report.max_ratio)} at {_fmt_points(report.max_points)} "
        f"equality_hits={len(report.equality_hits)}"
    )
    return 0 if report.ok else 1


def _cmd_scan_k(args) -> int:
    spec = _spec_from_args(args)
    ks = _parse_k_list(args.ks)
    if not ks:
        raise InputError("--ks produced an empty list")
    rows = verifier.scan_k(ks, spec)
    header = documents.SCAN_CSV_COLUMNS
    table = [documents.scan_row_csv(row) for row in rows]
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(header)
            writer.writerows(table)
    widths = [
        max(len(header[i]), max(len(row[i]) for row in table))
        for i in range(len(header))
    ]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in table:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    if args.plot:
        from . import plots

        plots.save_scan_plot(rows, args.plot)
    return 0


def _cmd_explore(args) -> int:
    spec = _spec_from_args(args)
    k = _parse_k(args.k)
    if not (-1 < k < 0):
        raise InputError(f"explore requires k in (-1, 0), got {k}")
    report = verifier.empirical_extrema(spec, k)
    doc = documents.exploration_report_document(report)
    if args.json:
        _write_json(doc, args.json)
    fr = documents.format_rational
    failures = sum(1 for r in report.records if r.parallel_failure)
    agreements = [r.pq_agrees for r in report.records if r.pq_agrees is not None]
    print(f"CONJECTURAL empirical envelope for k={fr(report.k)}")
    print(
        f"samples={len(report.records)} parallel_failures={failures} "
        f"pq_agreement={sum(agreements)}/{len(agreements)}"
    )
    print(
        f"min={fr(report.min_ratio)} at {_fmt_points(report.min_points)} "
        f"max={fr(report.max_ratio)} at {_fmt_points(report.max_points)}"
    )
    if args.plot:
        from . import plots

        plots.save_exploration_plot(report, args.plot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscut",
        description=(
            "Exact-arithmetic crosscut quadrilateral constructions, sharp "
            "area-ratio bounds, and polynomial identity verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="construct a figure from a quad file")
    p.add_argument("--input", required=True, help="quadrilateral JSON document")
    p.add_argument("--k", required=True, help="ratio parameter (rational)")
    p.add_argument("--svg", help="also render the figure to this SVG file")
    p.add_argument("--output", help="write the figure JSON here (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("ratio", help="exact ratio for canonical parameters")
    p.add_argument("--canonical", required=True, help="a,b (rationals)")
    p.add_argument("--k", required=True, help="ratio parameter (rational)")
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("verify-identities",
                       help="verify all polynomial identities by expansion")
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("verify-bounds",
                       help="check sampled ratios against the sharp bounds")
    p.add_argument("--k", required=True, help="ratio parameter > 0")
    p.add_argument("--json", help="write the full report to this JSON file")
    _add_sampling_flags(p)
    p.set_defaults(func=_cmd_verify_bounds)

    p = sub.add_parser("scan-k", help="scan a list or range of k values")
    p.add_argument("--ks", required=True,
                   help="comma list '1/2,1,2' or range 'from:to:step'")
    p.add_argument("--csv", help="write the table to this CSV file")
    p.add_argument("--plot", help="render a matplotlib figure to this file")
    _add_sampling_flags(p)
    p.set_defaults(func=_cmd_scan_k)

    p = sub.add_parser("explore",
                       help="empirical envelope for k in (-1, 0), conjectural")
    p.add_argument("--k", required=True, help="ratio parameter in (-1, 0)")
    p.add_argument("--json", help="write the full report to this JSON file")
    p.add_argument("--plot", help="render a matplotlib figure to this file")
    _add_sampling_flags(p)
    p.set_defaults(func=_cmd_explore)
    return parser


def _join_negative_values(argv: List[str]) -> List[str]:
    """Rewrite ['--k', '-1/2'] as ['--k=-1/2'] so argparse does not read a
    negative rational as an option name."""
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            token.startswith("--")
            and "=" not in token
            and nxt is not None
            and len(nxt) > 1
            and nxt[0] == "-"
            and nxt[1].isdigit()
        ):
            out.append(f"{token}={nxt}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def run_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_negative_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrosscutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
