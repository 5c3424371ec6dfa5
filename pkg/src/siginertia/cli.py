"""Command-line front end.

Exit codes: 0 success, 1 a mathematically negative result (bound violation,
graph not cycle-disjoint), 2 usage, I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .core import SgParseError, SignedGraph, format_sg, parse_sg
from .families import CycleSpec, cycle_inertia_formula, make_cycle, make_path, path_inertia_formula
from .inertia import graph_inertia
from .structure import UnsupportedStructureError, contraction_tree
from .verify.checks import check_bounds
from .verify.enumerate import HARD_CAP
from .verify.report import format_record, format_report_table, format_summary, summary_records
from .verify.suite import DEFAULT_MAX_N, SuiteOptions, run_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandOutcome:
    exit_code: int
    payload: str


def _load(path: str) -> SignedGraph | CommandOutcome:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        return CommandOutcome(EXIT_USAGE, f"error: cannot read {path}: {exc}")
    try:
        return parse_sg(text)
    except SgParseError as exc:
        return CommandOutcome(EXIT_USAGE, f"{path}:{exc.line}:{exc.column}: parse error: {exc.message}")


def cmd_analyze(path: str, machine: bool = False) -> CommandOutcome:
    g = _load(path)
    if isinstance(g, CommandOutcome):
        return g
    try:
        rep = check_bounds(g)
    except ValueError as exc:
        return CommandOutcome(EXIT_USAGE, f"error: {exc}")
    text = format_record(rep) if machine else format_report_table(rep)
    return CommandOutcome(EXIT_OK if rep.passed else EXIT_NEGATIVE, text)


def cmd_verify(
    max_n: int,
    connected_only: bool = True,
    include_n8: bool = False,
    sample_unions: int = 0,
    report_path: str | None = None,
    seed: int = 0,
    lemma_rate: float = 1.0,
    workers: int = 1,
    machine: bool = False,
) -> CommandOutcome:
    cap = HARD_CAP if include_n8 else DEFAULT_MAX_N
    if not 2 <= max_n <= cap:
        hint = " (pass --include-n8 for n=8; expect a few minutes and ~1.8M signatures)" if max_n == HARD_CAP else ""
        return CommandOutcome(EXIT_USAGE, f"error: --max-n must lie in 2..{cap}{hint}")
    if not 0.0 <= lemma_rate <= 1.0:
        return CommandOutcome(EXIT_USAGE, "error: --lemma-rate must lie in [0, 1]")
    options = SuiteOptions(
        connected_only=connected_only,
        include_n8=include_n8,
        sample_unions=sample_unions,
        seed=seed,
        lemma_rate=lemma_rate,
        workers=workers,
    )
    summary = run_suite(max_n, options)
    records = "\n".join(summary_records(summary)) + "\n"
    if report_path:
        try:
            Path(report_path).write_text(records)
        except OSError as exc:
            return CommandOutcome(EXIT_USAGE, f"error: cannot write {report_path}: {exc}")
    text = records.rstrip("\n") if machine else format_summary(summary)
    return CommandOutcome(EXIT_OK if summary.ok else EXIT_NEGATIVE, text)


def cmd_family(kind: str, n: int, balanced: bool = True) -> CommandOutcome:
    try:
        if kind == "cycle":
            spec = CycleSpec(n, balanced)
            g, formula = make_cycle(spec), cycle_inertia_formula(spec)
        elif kind == "path":
            g, formula = make_path(n), path_inertia_formula(n)
        else:
            return CommandOutcome(EXIT_USAGE, f"error: unknown family {kind!r}")
    except ValueError as exc:
        return CommandOutcome(EXIT_USAGE, f"error: {exc}")
    computed = graph_inertia(g)
    label = f"{kind} {n}" + ("" if kind == "path" else " balanced" if balanced else " unbalanced")
    lines = [
        f"# family {label}",
        f"# formula inertia={formula}",
        f"# computed inertia={computed}",
        f"# agree={'yes' if formula == computed else 'NO'}",
    ]
    code = EXIT_OK if formula == computed else EXIT_NEGATIVE
    return CommandOutcome(code, "\n".join(lines) + "\n" + format_sg(g).rstrip("\n"))


def cmd_contract(path: str) -> CommandOutcome:
    g = _load(path)
    if isinstance(g, CommandOutcome):
        return g
    try:
        tree = contraction_tree(g)
    except UnsupportedStructureError as exc:
        return CommandOutcome(EXIT_NEGATIVE, f"not cycle-disjoint: {exc}; the contraction tree is undefined")
    except ValueError as exc:
        return CommandOutcome(EXIT_USAGE, f"error: {exc}")
    lines = [f"# contraction tree: {len(tree.nodes)} nodes, {len(tree.edges)} edges"]
    lines.extend(f"node {i} {node.label()}" for i, node in enumerate(tree.nodes))
    lines.extend(f"edge {a} {b}" for a, b in tree.edges)
    return CommandOutcome(EXIT_OK, "\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="siginertia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="parameters, inertia and bound checks for one .sg file")
    p.add_argument("path")
    p.add_argument("--machine", action="store_true", help="one key=value record instead of a table")

    p = sub.add_parser("verify", help="exhaustive check over all small signed graphs")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--connected-only", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--include-n8", action="store_true", help="allow --max-n 8 (minutes of runtime)")
    p.add_argument("--sample-unions", type=int, default=0, metavar="K", help="also check K random disjoint unions")
    p.add_argument("--report", dest="report_path", metavar="PATH", help="write machine records here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lemma-rate", type=float, default=1.0, help="fraction of signatures given the deletion-lemma checks")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--machine", action="store_true")

    p = sub.add_parser("family", help="emit a signed cycle or path and compare closed-form and computed inertia")
    p.add_argument("kind", choices=("cycle", "path"))
    p.add_argument("n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--balanced", dest="balanced", action="store_true", default=True)
    g.add_argument("--unbalanced", dest="balanced", action="store_false")

    p = sub.add_parser("contract", help="contraction tree of a connected cycle-disjoint graph")
    p.add_argument("path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        out = cmd_analyze(args.path, args.machine)
    elif args.command == "verify":
        out = cmd_verify(
            args.max_n,
            connected_only=args.connected_only,
            include_n8=args.include_n8,
            sample_unions=args.sample_unions,
            report_path=args.report_path,
            seed=args.seed,
            lemma_rate=args.lemma_rate,
            workers=args.workers,
            machine=args.machine,
        )
    elif args.command == "family":
        out = cmd_family(args.kind, args.n, args.balanced)
    else:
        out = cmd_contract(args.path)
    stream = sys.stdout if out.exit_code != EXIT_USAGE else sys.stderr
    print(out.payload, file=stream)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
