"""Command-line entry point: ``tzdg analyze|sweep|export|pairs|isocheck``.

Exit codes: 0 all checks agree, 1 mathematical mismatch, 2 usage error,
3 budget exhausted on a check named with ``--require``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import fields

from . import formulas
from .errors import DomainError, ResourceError
from .exact import are_isomorphic, fingerprint
from .exact.structure import connectivity
from .graphs import build_graph, export_dot, export_json, build_total_zero_divisor_graph
from .report import SWEEP_COLUMNS, Budgets, SweepConfig, analyze, sweep

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _add_budget_flags(p: argparse.ArgumentParser):
    for f in fields(Budgets):
        p.add_argument(
            f"--budget-{f.name.replace('_', '-')}",
            dest=f"budget_{f.name}",
            type=int,
            default=f.default,
            metavar="N",
        )


def _budgets(args) -> Budgets:
    return Budgets(**{f.name: getattr(args, f"budget_{f.name}") for f in fields(Budgets)})


def _add_subject(p: argparse.ArgumentParser):
    p.add_argument("modulus", nargs="?", type=int, help="m for Z_m")
    p.add_argument("--m", type=int, dest="m_flag")
    p.add_argument("--ring", help="product spec such as 4x9")


def _subject(args):
    given = [v for v in (args.modulus, args.m_flag, args.ring) if v is not None]
    if len(given) != 1:
        raise DomainError("give exactly one of: m, --m, --ring")
    value = given[0]
    if isinstance(value, int) and value < 2:
        raise DomainError(f"modulus must be >= 2, got {value}")
    return value


def _print_table(report, out):
    print(f"{report.subject}: |V|={report.vertex_count} |E|={report.edge_count} status={report.status}", file=out)
    for c in report.checks:
        note = f"  ({c.reason})" if c.reason else ""
        print(
            f"  {c.invariant:<18} {c.method:<11} pred={c.predicted!s:<12} obs={c.observed!s:<12} {c.status}{note}",
            file=out,
        )
    for cert in report.certificates:
        print(f"  certificate {cert.kind}: verified={cert.verified} {cert.detail}", file=out)


def cmd_analyze(args, out) -> int:
    report = analyze(_subject(args), _budgets(args), certificates=not args.no_certificates)
    if args.json:
        json.dump(report.to_json(include_timings=args.timings), out, indent=2, default=str)
        out.write("\n")
    else:
        _print_table(report, out)
    if report.mismatches:
        return EXIT_MISMATCH
    required = {r for r in (args.require or "").split(",") if r}
    if any(c.resource and c.invariant in required for c in report.checks):
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    config = SweepConfig(args.m_from, args.m_to, _budgets(args), args.out, args.jobs)
    rows = sweep(config)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    bad = sum(r["status"] == "FAIL" for r in rows)
    print(f"sweep {config.m_from}..{config.m_to}: {len(rows)} rows, {bad} mismatches", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_export(args, out) -> int:
    g = build_graph(args.graph, _subject(args))
    text = export_dot(g) if args.format == "dot" else export_json(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def degree_pairs(x_max: int):
    """Feasible (x, y) with the realizing m and whether the degree predictor agrees."""
    rows = []
    for x in range(1, x_max + 1):
        for y in range(1, x):
            if formulas.feasible_degree_pair(x, y):
                m = (x + 2) * (y + 1)
                rows.append((x, y, m, formulas.predict_degrees(m) == (x, y)))
    return rows


def cmd_pairs(args, out) -> int:
    rows = degree_pairs(args.x_max)
    if args.json:
        json.dump([{"x": x, "y": y, "m": m, "realized": ok} for x, y, m, ok in rows], out)
        out.write("\n")
    else:
        print("x\ty\tm\trealized", file=out)
        for x, y, m, ok in rows:
            print(f"{x}\t{y}\t{m}\t{str(ok).lower()}", file=out)
    return EXIT_OK if all(ok for *_, ok in rows) else EXIT_MISMATCH


def isomorphic_pairs(m_max: int, node_limit: int = 1_000_000):
    """Pairs m < n <= m_max of connected graphs that are isomorphic, plus compared-pair count."""
    graphs = {}
    for m in range(4, m_max + 1):
        if formulas.predict_connected(m):
            g = build_total_zero_divisor_graph(m)
            if connectivity(g).is_connected:
                graphs[m] = g
    by_print: dict = {}
    for m, g in graphs.items():
        by_print.setdefault(fingerprint(g), []).append(m)
    found, compared = [], 0
    for group in by_print.values():
        for i, a in enumerate(group):
            for b in group[i + 1 :]:
                compared += 1
                if are_isomorphic(graphs[a], graphs[b], node_limit):
                    found.append((a, b))
    return found, compared, sorted(graphs)


def cmd_isocheck(args, out) -> int:
    found, compared, ms = isomorphic_pairs(args.m_max, args.budget_search_nodes)
    roundtrip_bad = [
        m
        for m in ms
        if not formulas.is_complete_case(m)
        and formulas.recover_modulus(*formulas.predict_degrees(m)) != m
    ]
    result = {
        "m_max": args.m_max,
        "connected_moduli": len(ms),
        "pairs_after_fingerprint": compared,
        "isomorphic_pairs": found,
        "recovery_failures": roundtrip_bad,
    }
    json.dump(result, out)
    out.write("\n")
    return EXIT_MISMATCH if found or roundtrip_bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tzdg", description="Total zero-divisor graphs of Z_m and finite products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report for one modulus or ring")
    _add_subject(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="append solver wall times (JSON only)")
    p.add_argument("--require", help="comma-separated invariants whose oracle must run")
    p.add_argument("--no-certificates", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="CSV of predictions vs oracles over a range of m")
    p.add_argument("--from", dest="m_from", type=int, required=True)
    p.add_argument("--to", dest="m_to", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["csv"], default="csv")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="write a graph as DOT or JSON")
    _add_subject(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--graph", choices=["tzdg", "zdg", "total"], default="tzdg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("pairs", help="feasible (max degree, min degree) pairs")
    p.add_argument("--x-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("isocheck", help="search for isomorphic graphs among connected Z_m")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--budget-search-nodes", type=int, default=1_000_000, metavar="N")
    p.set_defaults(func=cmd_isocheck)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except DomainError as exc:
        print(f"tzdg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"tzdg: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"tzdg: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
