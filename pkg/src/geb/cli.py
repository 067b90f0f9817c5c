"""Command-line interface.

Subcommands: ``report`` (per-graph bound report), ``verify`` (proven-bound
soundness over a corpus), ``conjectures`` (conjectured bounds over the
connected graphs of a corpus), ``equality`` (tightness search for one
bound), ``enumerate`` (export one graph6 line per isomorphism class).

Corpora are graph6 files, one graph per line; alternatively --enumerate N
generates the connected graphs on N vertices in-process. Exit codes:
0 clean, 1 violations or counterexamples found, 2 usage or input errors.

Environment: GEB_ZERO_TOL overrides the spectral zero threshold, GEB_TOL
the soundness tolerance; explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable, Iterator

from .bounds import BoundReport, bound_report
from .enumeration import MAX_ENUMERATION_N, enumerate_connected, enumerate_graphs
from .errors import GebError
from .graphs import Graph, from_edge_list
from .graph6 import parse_graph6, stream_corpus, write_graph6
from .harness import (
    DEFAULT_EQUALITY_EPS,
    DEFAULT_TOL,
    EQUALITY_BOUNDS,
    CorpusSummary,
    run_conjectures,
    run_equality,
    run_verify,
)
from .spectral import DEFAULT_ZERO_TOL

EXIT_CLEAN = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise _UsageError(f"environment variable {name} is not a number: {raw!r}")


def _resolve(flag_value: float | None, env_name: str, default: float) -> float:
    if flag_value is not None:
        return flag_value
    env_value = _env_float(env_name)
    if env_value is not None:
        return env_value
    return default


def _read_edge_list(path: str) -> Graph:
    """Edge-list file: first number is n, then one 'i j' pair per edge.

    Whitespace-separated; '#' starts a comment running to end of line.
    """
    tokens: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            text = line.split("#", 1)[0]
            for tok in text.split():
                try:
                    tokens.append(int(tok))
                except ValueError:
                    raise _UsageError(f"{path}: not an integer: {tok!r}")
    if not tokens:
        raise _UsageError(f"{path}: empty edge-list file")
    n = tokens[0]
    rest = tokens[1:]
    if len(rest) % 2:
        raise _UsageError(f"{path}: odd number of edge endpoints")
    edges = list(zip(rest[0::2], rest[1::2]))
    return from_edge_list(n, edges)


def _format_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _render_report(report: BoundReport, fmt: str) -> str:
    data = report.to_dict()
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(BoundReport.csv_header())
        writer.writerow(["" if v is None else v for v in data.values()])
        return buf.getvalue().rstrip("\n")
    width = max(len(k) for k in data)
    return "\n".join(f"{k:<{width}}  {_format_value(v)}" for k, v in data.items())


def _cmd_report(args: argparse.Namespace) -> int:
    if (args.graph6 is None) == (args.edges is None):
        raise _UsageError("report needs exactly one of: a graph6 string, or --edges FILE")
    if args.edges is not None:
        g = _read_edge_list(args.edges)
    else:
        g = parse_graph6(args.graph6)
    zero_tol = _resolve(args.zero_tol, "GEB_ZERO_TOL", DEFAULT_ZERO_TOL)
    print(_render_report(bound_report(g, zero_tol), args.format))
    return EXIT_CLEAN


class _SkipCounter:
    def __init__(self):
        self.count = 0

    def __call__(self, line_number: int, exc: GebError) -> None:
        self.count += 1
        print(f"skipping line {line_number}: {exc}", file=sys.stderr)


def _corpus_source(args: argparse.Namespace, skips: _SkipCounter) -> Iterator[Graph]:
    if args.enumerate is not None:
        if not 1 <= args.enumerate <= MAX_ENUMERATION_N:
            raise _UsageError(f"--enumerate accepts 1..{MAX_ENUMERATION_N}")
        yield from enumerate_connected(args.enumerate)
        return
    skip_bad = getattr(args, "skip_bad", False)
    with open(args.corpus, encoding="ascii", errors="strict") as fh:
        for _lineno, g in stream_corpus(fh, skip_bad=skip_bad, on_bad=skips):
            yield g


def _print_summary(summary: CorpusSummary, violations_label: str) -> None:
    print(f"graphs seen: {summary.graphs_seen}")
    print(f"graphs skipped: {summary.graphs_skipped}")
    print(f"{violations_label}: {len(summary.violations)}")
    for name in sorted(summary.extremes):
        ext = summary.extremes[name]
        print(f"min slack {name}: {ext.slack:.12g} at {ext.graph6}")


def _print_violations(summary: CorpusSummary) -> None:
    for v in summary.violations:
        detail = f" {v.detail}" if v.detail else ""
        print(
            f"VIOLATION {v.graph6} {v.bound_name}: bound={v.bound_value:.12g} "
            f"energy={v.energy:.12g}{detail}",
            file=sys.stderr,
        )


def _cmd_verify(args: argparse.Namespace) -> int:
    tol = _resolve(args.tol, "GEB_TOL", DEFAULT_TOL)
    zero_tol = _resolve(args.zero_tol, "GEB_ZERO_TOL", DEFAULT_ZERO_TOL)
    skips = _SkipCounter()
    summary = run_verify(_corpus_source(args, skips), tol=tol, zero_tol=zero_tol, jobs=args.jobs)
    summary.graphs_skipped += skips.count
    _print_summary(summary, "violations")
    _print_violations(summary)
    return EXIT_VIOLATIONS if summary.violations else EXIT_CLEAN


def _cmd_conjectures(args: argparse.Namespace) -> int:
    tol = _resolve(args.tol, "GEB_TOL", DEFAULT_TOL)
    zero_tol = _resolve(args.zero_tol, "GEB_ZERO_TOL", DEFAULT_ZERO_TOL)
    skips = _SkipCounter()
    summary = run_conjectures(
        _corpus_source(args, skips), tol=tol, zero_tol=zero_tol, jobs=args.jobs
    )
    summary.graphs_skipped += skips.count
    _print_summary(summary, "counterexamples")
    _print_violations(summary)
    return EXIT_VIOLATIONS if summary.violations else EXIT_CLEAN


def _cmd_equality(args: argparse.Namespace) -> int:
    eps = args.eps if args.eps is not None else DEFAULT_EQUALITY_EPS
    zero_tol = _resolve(args.zero_tol, "GEB_ZERO_TOL", DEFAULT_ZERO_TOL)
    skips = _SkipCounter()
    summary = run_equality(
        _corpus_source(args, skips), bound=args.bound, eps=eps,
        zero_tol=zero_tol, jobs=args.jobs,
    )
    summary.graphs_skipped += skips.count
    for hit in summary.equality_hits:
        print(
            f"{hit.graph6}  {hit.bound_name}  slack={hit.slack:.6e}  "
            f"complete_bipartite={'yes' if hit.is_complete_bipartite else 'no'}"
        )
    print(f"graphs seen: {summary.graphs_seen}")
    print(f"graphs skipped: {summary.graphs_skipped}")
    print(f"equality hits: {len(summary.equality_hits)}")
    return EXIT_CLEAN


def _cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_graphs(args.n, connected=args.connected)
    with open(args.out, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
    print(f"{len(graphs)} graphs written to {args.out}")
    return EXIT_CLEAN


def _add_corpus_options(parser: argparse.ArgumentParser, with_skip_bad: bool = True) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--corpus", metavar="FILE", help="graph6 file, one graph per line")
    source.add_argument(
        "--enumerate", type=int, metavar="N",
        help=f"use the connected graphs on N vertices (1..{MAX_ENUMERATION_N})",
    )
    if with_skip_bad:
        parser.add_argument(
            "--skip-bad", action="store_true",
            help="skip undecodable corpus lines instead of aborting",
        )
    parser.add_argument(
        "--jobs", type=int, default=1, metavar="K",
        help="worker processes for corpus processing (default 1)",
    )
    parser.add_argument(
        "--zero-tol", type=float, default=None, metavar="T",
        help=f"spectral zero threshold (default {DEFAULT_ZERO_TOL}, env GEB_ZERO_TOL)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geb",
        description="Graph energy bounds: reports, corpus verification, equality search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="bound report for a single graph")
    p_report.add_argument("graph6", nargs="?", help="graph6 string, e.g. 'Bw'")
    p_report.add_argument("--edges", metavar="FILE", help="edge-list file (n, then i j pairs)")
    p_report.add_argument(
        "--format", choices=("json", "table", "csv"), default="json",
        help="output format (default json)",
    )
    p_report.add_argument("--zero-tol", type=float, default=None, metavar="T")
    p_report.set_defaults(func=_cmd_report)

    p_verify = sub.add_parser("verify", help="check every proven bound over a corpus")
    _add_corpus_options(p_verify)
    p_verify.add_argument(
        "--tol", type=float, default=None, metavar="T",
        help=f"soundness tolerance (default {DEFAULT_TOL}, env GEB_TOL)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_conj = sub.add_parser(
        "conjectures", help="check the conjectured bounds on connected corpus graphs"
    )
    _add_corpus_options(p_conj)
    p_conj.add_argument(
        "--tol", type=float, default=None, metavar="T",
        help=f"comparison tolerance (default {DEFAULT_TOL}, env GEB_TOL)",
    )
    p_conj.set_defaults(func=_cmd_conjectures)

    p_eq = sub.add_parser("equality", help="list graphs where a bound is tight")
    p_eq.add_argument(
        "--bound", required=True, choices=EQUALITY_BOUNDS,
        help="which lower bound to scan for equality",
    )
    _add_corpus_options(p_eq)
    p_eq.add_argument(
        "--eps", type=float, default=None, metavar="E",
        help=f"equality tolerance on |E - bound| (default {DEFAULT_EQUALITY_EPS})",
    )
    p_eq.set_defaults(func=_cmd_equality)

    p_enum = sub.add_parser("enumerate", help="write one graph6 line per isomorphism class")
    p_enum.add_argument("--n", type=int, required=True, metavar="N")
    p_enum.add_argument(
        "--connected", action="store_true", help="connected graphs only"
    )
    p_enum.add_argument("--out", required=True, metavar="FILE")
    p_enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GebError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
