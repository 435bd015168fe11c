"""Command line interface for enumerating minimal chordal completions.

Commands: ``enumerate`` streams solutions, ``count`` totals them, ``verify``
cross-checks both traversal modes (and the brute-force oracle when the
non-edge set is small enough), ``bench`` measures inter-emission delay.

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import gc
import json
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Iterator, Optional, TextIO

from .completions import Completion
from .engine import (SetSystem, TraversalStats, chordal_completion_system,
                     reverse_search, visited_set_search)
from .graph import Graph, GraphInputError, non_edges
from .oracle import (DEFAULT_GROUND_LIMIT, SolutionSet,
                     brute_force_minimal_completions, verify_solution_set)

MODES = ("reverse_search", "visited_set")
FORMATS = ("edges", "jsonlines")
INPUT_FORMATS = ("auto", "edge_list", "dimacs")


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs, normalized from argparse."""

    command: str
    text: str
    input_format: str = "auto"
    mode: str = "reverse_search"
    limit: Optional[int] = None
    output_format: str = "edges"
    stats: bool = False
    oracle_limit: int = DEFAULT_GROUND_LIMIT


def parse_graph_input(text: str, input_format: str = "auto"
                      ) -> tuple[Graph, tuple[str, ...]]:
    """Parse graph text into a graph plus the original vertex labels.

    ``edge_list``: one edge per line as two whitespace-separated labels,
    ``#`` starts a comment; vertices are numbered by first appearance.
    ``dimacs``: a single ``p edge <n> <m>`` header, ``c`` comments, and
    exactly ``m`` lines ``e <u> <v>`` with 1-based endpoints.
    ``auto`` picks dimacs when a ``p`` header line is present.
    """
    if input_format == "auto":
        has_header = any(line.split()[:1] == ["p"]
                         for line in text.splitlines())
        input_format = "dimacs" if has_header else "edge_list"
    if input_format == "edge_list":
        return _parse_edge_list(text)
    if input_format == "dimacs":
        return _parse_dimacs(text)
    raise GraphInputError(f"unknown input format {input_format!r}")


def _parse_edge_list(text: str) -> tuple[Graph, tuple[str, ...]]:
    labels: dict[str, int] = {}
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphInputError(
                f"line {ln}: expected two vertex labels, got {len(tokens)}")
        if tokens[0] == tokens[1]:
            raise GraphInputError(
                f"line {ln}: self-loop {tokens[0]} {tokens[1]}")
        pair = []
        for tok in tokens:
            if tok not in labels:
                labels[tok] = len(labels)
            pair.append(labels[tok])
        edges.append((pair[0], pair[1]))
    ordered = tuple(sorted(labels, key=labels.get))
    return Graph(len(labels), edges), ordered


def _parse_dimacs(text: str) -> tuple[Graph, tuple[str, ...]]:
    n = None
    declared_m = 0
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphInputError(f"line {ln}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphInputError(
                    f"line {ln}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphInputError(
                    f"line {ln}: non-integer sizes in problem line") from None
            if n < 0 or declared_m < 0:
                raise GraphInputError(f"line {ln}: negative size")
        elif tokens[0] == "e":
            if n is None:
                raise GraphInputError(
                    f"line {ln}: edge before the problem line")
            if len(tokens) != 3:
                raise GraphInputError(f"line {ln}: expected 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphInputError(
                    f"line {ln}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphInputError(
                    f"line {ln}: endpoint outside 1..{n}")
            if u == v:
                raise GraphInputError(f"line {ln}: self-loop e {u} {v}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphInputError(
                f"line {ln}: unrecognized dimacs line {tokens[0]!r}")
    if n is None:
        raise GraphInputError("missing 'p edge <n> <m>' problem line")
    if len(edges) != declared_m:
        raise GraphInputError(
            f"problem line declares {declared_m} edges but {len(edges)} "
            "'e' lines found")
    return Graph(n, edges), tuple(str(v) for v in range(1, n + 1))


def _format_edges(f: Completion, labels: tuple[str, ...]) -> str:
    if not f.mask:
        return "-"
    return ",".join(f"{labels[u]}-{labels[v]}" for u, v in f.fill_edges)


def _format_jsonline(f: Completion, labels: tuple[str, ...]) -> str:
    return json.dumps(
        {"fill": [[labels[u], labels[v]] for u, v in f.fill_edges]},
        separators=(",", ":"))


def _solutions(system: SetSystem, mode: str,
               stats: TraversalStats) -> Iterator[Completion]:
    if mode == "reverse_search":
        return reverse_search(system, stats)
    return visited_set_search(system, stats)


def _print_stats(stats: TraversalStats, out: TextIO) -> None:
    for name, value in stats.as_dict().items():
        print(f"{name}={value}", file=out)


def _cmd_enumerate(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g, labels = parse_graph_input(config.text, config.input_format)
    system = chordal_completion_system(g)
    stats = TraversalStats()
    fmt = _format_jsonline if config.output_format == "jsonlines" else _format_edges
    emitted = 0
    for f in _solutions(system, config.mode, stats):
        print(fmt(f, labels), file=out)
        emitted += 1
        if config.limit is not None and emitted >= config.limit:
            break
    if config.stats:
        _print_stats(stats, err)
    return 0


def _cmd_count(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g, _ = parse_graph_input(config.text, config.input_format)
    system = chordal_completion_system(g)
    stats = TraversalStats()
    count = 0
    for _ in _solutions(system, config.mode, stats):
        count += 1
        if config.limit is not None and count >= config.limit:
            break
    print(count, file=out)
    if config.stats:
        _print_stats(stats, err)
    return 0


def _cmd_verify(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g, _ = parse_graph_input(config.text, config.input_format)
    system = chordal_completion_system(g)
    produced = SolutionSet.collect(
        g, reverse_search(system), source="reverse_search")
    baseline = SolutionSet.collect(
        g, visited_set_search(system), source="visited_set")
    print(f"reverse_search solutions: {len(produced)}", file=out)
    print(f"visited_set solutions: {len(baseline)}", file=out)
    ok = not produced.duplicates and not baseline.duplicates
    if produced.duplicates:
        print(f"reverse_search duplicates: {len(produced.duplicates)}",
              file=out)
    if baseline.duplicates:
        print(f"visited_set duplicates: {len(baseline.duplicates)}", file=out)
    modes_agree = produced.solutions == baseline.solutions
    ok = ok and modes_agree
    print(f"modes agree: {'yes' if modes_agree else 'no'}", file=out)
    ground = len(non_edges(g))
    if ground <= config.oracle_limit:
        reference = brute_force_minimal_completions(g, limit=config.oracle_limit)
        print(f"oracle solutions: {len(reference)}", file=out)
        report = verify_solution_set(produced, reference)
        ok = ok and report.ok
        print(str(report), file=out)
    else:
        print(f"oracle skipped: {ground} non-edges exceed the limit of "
              f"{config.oracle_limit}", file=out)
    return 0 if ok else 1


def _cmd_bench(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g, _ = parse_graph_input(config.text, config.input_format)
    system = chordal_completion_system(g)
    stats = TraversalStats()
    gaps = []
    it = _solutions(system, config.mode, stats)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        last = start
        for count, _ in enumerate(it, start=1):
            now = time.perf_counter()
            gaps.append(now - last)
            last = now
            if config.limit is not None and count >= config.limit:
                break
        total = last - start
    finally:
        if gc_was_enabled:
            gc.enable()
    print(f"solutions={len(gaps)}", file=out)
    print(f"total_s={total:.3f}", file=out)
    if gaps:
        gaps_ms = sorted(delta * 1000 for delta in gaps)
        decile = max(1, len(gaps) // 10)
        first_max = max(gaps[:decile]) * 1000
        last_max = max(gaps[-decile:]) * 1000
        ratio = last_max / first_max if first_max > 0 else float("inf")
        print(f"delay_ms min={gaps_ms[0]:.4f} "
              f"median={statistics.median(gaps_ms):.4f} "
              f"max={gaps_ms[-1]:.4f}", file=out)
        print(f"first_decile_max_ms={first_max:.4f} "
              f"last_decile_max_ms={last_max:.4f} "
              f"ratio={ratio:.3f}", file=out)
    print(f"peak_retained={stats.peak_retained}", file=out)
    return 0


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordalenum",
        description="Enumerate all minimal chordal completions of a graph.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", nargs="?", default="-",
                       help="input file, or - for stdin (default)")
        p.add_argument("--input-format", choices=INPUT_FORMATS,
                       default="auto")

    p_enum = sub.add_parser("enumerate", help="stream all solutions")
    add_common(p_enum)
    p_enum.add_argument("--mode", choices=MODES, default="reverse_search")
    p_enum.add_argument("--limit", type=int, default=None,
                        help="stop after this many solutions")
    p_enum.add_argument("--format", choices=FORMATS, default="edges",
                        dest="output_format")
    p_enum.add_argument("--stats", action="store_true",
                        help="print work counters to stderr")

    p_count = sub.add_parser("count", help="count all solutions")
    add_common(p_count)
    p_count.add_argument("--mode", choices=MODES, default="reverse_search")
    p_count.add_argument("--limit", type=int, default=None)
    p_count.add_argument("--stats", action="store_true")

    p_verify = sub.add_parser(
        "verify", help="cross-check both modes and the brute-force oracle")
    add_common(p_verify)
    p_verify.add_argument("--oracle-limit", type=int,
                          default=DEFAULT_GROUND_LIMIT,
                          help="skip the oracle above this many non-edges")

    p_bench = sub.add_parser("bench", help="measure inter-solution delay")
    add_common(p_bench)
    p_bench.add_argument("--mode", choices=MODES, default="reverse_search")
    p_bench.add_argument("--limit", type=int, default=None)
    return parser


def run(config: RunConfig, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    """Execute one parsed CLI invocation; returns the exit code.

    ``out`` and ``err`` default to the process streams at call time, so
    redirecting ``sys.stdout`` before calling works as expected.
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if config.command == "enumerate":
            return _cmd_enumerate(config, out, err)
        if config.command == "count":
            return _cmd_count(config, out, err)
        if config.command == "verify":
            return _cmd_verify(config, out, err)
        if config.command == "bench":
            return _cmd_bench(config, out, err)
        raise GraphInputError(f"unknown command {config.command!r}")
    except GraphInputError as exc:
        print(f"error: {exc}", file=err)
        return 2


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = _read_input(args.path)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    config = RunConfig(
        command=args.command,
        text=text,
        input_format=args.input_format,
        mode=getattr(args, "mode", "reverse_search"),
        limit=getattr(args, "limit", None),
        output_format=getattr(args, "output_format", "edges"),
        stats=getattr(args, "stats", False),
        oracle_limit=getattr(args, "oracle_limit", DEFAULT_GROUND_LIMIT),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
