"""Command-line interface.

Exit codes: 0 success, 1 verification or validation failure, 2 usage,
3 parse error, 4 oracle size-guard refusal.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .decomposition import decompose
from .dimacs import ParseError, format_potential, parse_dimacs, parse_potential
from .mincut import all_min_cuts, enumerate_min_cuts, maximal_min_cut, minimal_min_cut
from .oracle import SizeGuardError, classify_by_enumeration
from .potential import (
    Potential,
    check_dual_optimal,
    diff_star,
    indicator_is_potential,
    level_decompose,
    potential_violations,
    sample_potential,
)
from .report import (
    analysis_document,
    cut_record,
    dot,
    dumps,
    dumps_line,
    fraction_list,
    header,
    maxflow_document,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3, 4


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flowdecomp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full decomposition as JSON")
    a.add_argument("file")
    a.add_argument("--cuts-limit", type=_positive)

    m = sub.add_parser("maxflow", help="maximum flow value and per-edge flows")
    m.add_argument("file")

    c = sub.add_parser("cuts", help="minimum cuts as newline-delimited JSON")
    c.add_argument("file")
    c.add_argument("--limit", type=_positive, default=1000)
    which = c.add_mutually_exclusive_group()
    which.add_argument("--minimal", action="store_true")
    which.add_argument("--maximal", action="store_true")

    j = sub.add_parser("jump", help="jump between two vertices (1-based ids)")
    j.add_argument("file")
    j.add_argument("u", type=int)
    j.add_argument("v", type=int)

    pot = sub.add_parser("potential", help="potential function tools")
    psub = pot.add_subparsers(dest="action", required=True)
    pv = psub.add_parser("validate")
    pv.add_argument("file")
    pv.add_argument("pifile")
    ps = psub.add_parser("sample")
    ps.add_argument("file")
    ps.add_argument("--seed", type=int, required=True)
    pd = psub.add_parser("decompose")
    pd.add_argument("file")
    pd.add_argument("pifile")

    v = sub.add_parser("verify", help="cross-check against brute-force oracles")
    v.add_argument("file")

    d = sub.add_parser("export-dot", help="Graphviz DOT with colored edges and block clusters")
    d.add_argument("file")
    return p


def _load(path: str):
    return parse_dimacs(Path(path).read_text(encoding="utf-8"))


def _violation_record(v) -> dict:
    vertex_kinds = ("range", "source", "sink")
    key = "vertex" if v.kind in vertex_kinds else "edge"
    where = v.where + 1 if key == "vertex" else v.where
    return {"kind": v.kind, key: where, "detail": v.detail}


def _cmd_analyze(args, out) -> int:
    dec = decompose(_load(args.file))
    out.write(dumps(analysis_document(dec, args.cuts_limit)))
    return EXIT_OK


def _cmd_maxflow(args, out) -> int:
    out.write(dumps(maxflow_document(decompose(_load(args.file)))))
    return EXIT_OK


def _cmd_cuts(args, out) -> int:
    dec = decompose(_load(args.file))
    if args.minimal or args.maximal:
        cut = minimal_min_cut(dec.flow) if args.minimal else maximal_min_cut(dec.flow)
        out.write(dumps_line({**header("cut"), **cut_record(cut)}))
        return EXIT_OK
    stream = enumerate_min_cuts(dec.flow, args.limit)
    for cut in stream:
        out.write(dumps_line({**header("cut"), **cut_record(cut)}))
    summary = header("cuts-summary")
    summary.update(count=stream.emitted, exhausted=stream.exhausted)
    out.write(dumps_line(summary))
    return EXIT_OK


def _cmd_jump(args, out) -> int:
    dec = decompose(_load(args.file))
    n = dec.network.vertex_count
    for x in (args.u, args.v):
        if not 1 <= x <= n:
            raise _Usage(f"vertex {x} outside [1, {n}]")
    result = dec.jump(args.u - 1, args.v - 1)
    doc = header("jump")
    doc.update(u=args.u, v=args.v, jump=result.exists, witness=list(result.path))
    out.write(dumps(doc))
    return EXIT_OK


def _cmd_potential(args, out) -> int:
    dec = decompose(_load(args.file))
    n = dec.network.vertex_count
    if args.action == "sample":
        out.write(format_potential(sample_potential(dec, args.seed).values))
        return EXIT_OK
    values = parse_potential(Path(args.pifile).read_text(encoding="utf-8"), n)
    violations = potential_violations(dec, values)
    doc = header("potential-" + args.action)
    doc["valid"] = not violations
    doc["violations"] = [_violation_record(v) for v in violations]
    if args.action == "decompose" and not violations:
        pot = Potential(tuple(values))
        levels = level_decompose(dec, pot)
        doc["thresholds"] = fraction_list(levels.thresholds)
        doc["sets"] = [[v + 1 for v in S] for S in levels.sets]
        doc["sets_are_min_cuts"] = all(indicator_is_potential(dec, S) for S in levels.sets)
        doc["reconstructs"] = levels.reconstruct(n) == pot.values
        doc["diff_star"] = fraction_list(diff_star(dec, pot))
        doc["dual_optimal"] = check_dual_optimal(dec, pot, dec.value)
    out.write(dumps(doc))
    return EXIT_OK if not violations else EXIT_FAIL


def _cmd_verify(args, out) -> int:
    net = _load(args.file)
    report = classify_by_enumeration(net)
    dec = decompose(net)
    cuts, exhausted = all_min_cuts(dec.flow)
    sides = sorted(tuple(v for v in c.source_side) for c in cuts)
    checks = {
        "oracles_agree": report.max_flow_value == report.min_cut_capacity,
        "max_flow_value": dec.value == report.max_flow_value,
        "edge_classes": [c.value for c in dec.edge_class] == list(report.edge_class),
        "min_cuts": exhausted and sides == [tuple(s) for s in report.min_cut_sides],
    }
    doc = header("verify")
    doc["ok"] = all(checks.values())
    doc["checks"] = [{"name": k, "ok": v} for k, v in checks.items()]
    doc["max_flow_value"] = report.max_flow_value
    doc["integral_max_flows"] = report.max_flow_count
    doc["oracle_edge_classes"] = list(report.edge_class)
    doc["oracle_min_cuts"] = [[v + 1 for v in s] for s in report.min_cut_sides]
    out.write(dumps(doc))
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def _cmd_export_dot(args, out) -> int:
    out.write(dot(decompose(_load(args.file))))
    return EXIT_OK


COMMANDS = {
    "analyze": _cmd_analyze,
    "maxflow": _cmd_maxflow,
    "cuts": _cmd_cuts,
    "jump": _cmd_jump,
    "potential": _cmd_potential,
    "verify": _cmd_verify,
    "export-dot": _cmd_export_dot,
}


class _Usage(Exception):
    pass


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as exc:
        err.write(f"flowdecomp: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"flowdecomp: parse error: {exc}\n")
        return EXIT_PARSE
    except SizeGuardError as exc:
        err.write(f"flowdecomp: refused: {exc}\n")
        return EXIT_GUARD
    except OSError as exc:
        err.write(f"flowdecomp: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
