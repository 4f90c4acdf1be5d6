"""Command-line entry point: ``hanoispan <command> ...``.

Results go to stdout as JSON (or edge-list / CSV text), diagnostics to
stderr.  Exit codes: 0 ok, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from hanoispan import counting, degree, oracle, sampler
from hanoispan.errors import HanoiError
from hanoispan.graph import build_graph, check_label, export_edges

log = logging.getLogger("hanoispan")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
ORACLE_COUNT_MAX_N = 4


def _rational(q: Fraction, as_float: bool) -> dict:
    out = {"num": str(q.numerator), "den": str(q.denominator)}
    if as_float:
        out["float"] = format(float(q), ".17g")
    return out


def _level_or_inf(text: str):
    if text.lower() in ("inf", "infinity", "∞"):
        return counting.INF
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}") from None


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def cmd_graph(args) -> int:
    fmt = "adjacency-json" if args.format == "json" else args.format
    sys.stdout.buffer.write(export_edges(build_graph(args.n), fmt))
    sys.stdout.flush()
    return EXIT_OK


def cmd_count(args) -> int:
    if args.method == "recursive":
        cv = counting.count_recursive(args.n).as_dict()
    elif args.method == "closed":
        cv = counting.count_closed(args.n).as_dict()
    else:
        if args.n > ORACLE_COUNT_MAX_N:
            raise HanoiError(f"--method oracle is limited to n <= {ORACLE_COUNT_MAX_N}")
        cv = oracle.class_counts(build_graph(args.n))
    h = counting.entropy(args.n)
    doc = {"command": "count", "n": args.n, "method": args.method}
    doc.update({k: str(v) for k, v in cv.items()})
    doc["entropy"] = format(float(h), ".17g") if args.float else str(h.value)
    _emit(doc)
    return EXIT_OK


def cmd_entropy(args) -> int:
    h = counting.entropy(args.n)
    value = format(float(h), ".17g") if args.float else str(h.value)
    _emit({"command": "entropy", "n": h.n if h.n != counting.INF else "inf", "entropy": value})
    return EXIT_OK


def cmd_degree(args) -> int:
    build_graph(args.n)  # validates the explicit-graph cap
    if args.all:
        vertices = build_graph(args.n).vertices
    else:
        vertices = [args.vertex]
    rows = []
    for v in vertices:
        vecs = degree.vertex_vectors(args.n, check_label(v, args.n))
        for i in degree.DEGREES:
            rows.append((v, i, vecs[i]))
    if args.format == "csv":
        out = ["vertex,i,numerator,denominator" + (",float" if args.float else "")]
        for v, i, comps in rows:
            q = comps[0]
            line = f"{v},{i},{q.numerator},{q.denominator}"
            if args.float:
                line += "," + format(float(q), ".17g")
            out.append(line)
        sys.stdout.write("\n".join(out) + "\n")
        return EXIT_OK
    _emit({
        "command": "degree",
        "n": args.n,
        "rows": [
            {"vertex": v, "i": i, **{c: _rational(q, args.float) for c, q in zip(degree.CLASSES, comps)}}
            for v, i, comps in rows
        ],
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    from hanoispan.verify import FAIL, run_verification

    checks = run_verification(args.n)
    ok = not any(c.status == FAIL for c in checks)
    for c in checks:
        if c.status != "PASS":
            print(f"{c.status}: {c.name} ({c.detail})", file=sys.stderr)
    _emit({"command": "verify", "n": args.n, "ok": ok, "checks": [c.to_json() for c in checks]})
    return EXIT_OK if ok else EXIT_FAILED


def cmd_sample(args) -> int:
    graph = build_graph(args.n)
    report = sampler.empirical_degree_report(graph, args.vertex, args.samples, args.seed)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            sampler.write_degree_csv(graph, args.vertex, args.samples, args.seed, fh)
    doc = {"command": "sample", **report.to_json()}
    _emit(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanoispan",
        description="Exact spanning-tree counts and degree distributions on Tower-of-Hanoi graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="export H_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["edge-list", "json"], default="edge-list")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("count", help="subgraph class counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["recursive", "closed", "oracle"], default="recursive")
    p.add_argument("--float", action="store_true", help="render entropy as a 17-digit float")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("entropy", help="spanning-tree entropy")
    p.add_argument("--n", type=_level_or_inf, required=True)
    p.add_argument("--float", action="store_true")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("degree", help="exact vertex degree distributions")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertex")
    group.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--float", action="store_true", help="add 17-significant-digit floats")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="run the exact self-check suite")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="Wilson sampling vs exact degree law")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vertex", required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="also write per-sample degrees to this CSV file")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (HanoiError, ValueError) as exc:
        print(f"hanoispan {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
