"""Machine-readable records and human-readable tables.

A record is one line of space-separated ``key=value`` pairs. The first key is
``sg``: the ``.sg`` text of the graph with newlines written as ``|`` and
spaces as ``,`` (so ``3 2\\n0 1 +\\n1 2 -\\n`` becomes ``sg=3,2|0,1,+|1,2,-``).
"""

from __future__ import annotations

from fractions import Fraction

from ..core import SignedGraph, connected_components, format_sg, parse_sg
from ..structure import component_balance
from .checks import EQUALITY_KINDS, STATUS_NAMES, TheoremReport
from .suite import SuiteSummary


def encode_sg(g: SignedGraph) -> str:
    return format_sg(g).strip().replace("\n", "|").replace(" ", ",")


def decode_sg(token: str) -> SignedGraph:
    return parse_sg(token.replace("|", "\n").replace(",", " "))


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def report_fields(rep: TheoremReport) -> list[tuple[str, str]]:
    g = rep.graph
    fields = [
        ("sg", encode_sg(g)),
        ("n", _fmt(rep.n)),
        ("m", _fmt(g.num_edges)),
        ("c", _fmt(len(connected_components(g)))),
        ("theta", _fmt(rep.theta)),
        ("p", _fmt(rep.p)),
        ("isolated", _fmt(rep.isolated)),
        ("balanced", ",".join(_fmt(b) for b in component_balance(g)) or "-"),
        ("cycle_disjoint", _fmt(rep.cycle_disjoint)),
        ("inertia", f"{rep.inertia.positive},{rep.inertia.negative},{rep.inertia.zero}"),
        ("weak_bound", _fmt(rep.weak_bound)),
        ("strict_applicable", _fmt(rep.strict_applicable)),
        ("strict_bound", _fmt(rep.strict_bound)),
        ("nullity_bound", _fmt(rep.nullity_bound)),
        ("extremal", _fmt(rep.extremal_verdict)),
        ("reason", rep.extremal_reason or "-"),
    ]
    flags = rep.equality_flags
    fields.extend((f"eq_{k}", _fmt(flags[k])) for k in EQUALITY_KINDS)
    statuses = rep.statuses
    fields.extend((name, {True: "pass", False: "FAIL", None: "na"}[statuses[name]]) for name in STATUS_NAMES)
    return fields


def format_record(rep: TheoremReport) -> str:
    return " ".join(f"{k}={v}" for k, v in report_fields(rep))


def parse_record(line: str) -> dict[str, str]:
    out = {}
    for tok in line.split():
        k, sep, v = tok.partition("=")
        if not sep:
            raise ValueError(f"malformed record token {tok!r}")
        out[k] = v
    return out


def format_report_table(rep: TheoremReport) -> str:
    rows = report_fields(rep)
    width = max(len(k) for k, _ in rows)
    lines = [format_sg(rep.graph).rstrip()]
    lines.append("-" * (width + 12))
    lines.extend(f"{k:<{width}}  {v}" for k, v in rows[1:])
    return "\n".join(lines)


def format_summary(summary: SuiteSummary) -> str:
    lines = [
        f"skeletons checked   {summary.graphs_checked}",
        f"signatures checked  {summary.signatures_checked}",
        f"unions checked      {summary.unions_checked}",
        f"lemma checks        {summary.lemma_checks}",
        f"violations          {len(summary.violations)}",
        f"lemma failures      {len(summary.lemma_failures)}",
        f"truncated           {'yes' if summary.truncated else 'no'}",
        "",
        "per order:  " + "  ".join(f"n={n}:{c}" for n, c in sorted(summary.per_order.items())),
        "",
        "equality census (attained x recognizer verdict)",
        f"  {'kind':<8} {'eq&ext':>8} {'eq&!ext':>8} {'!eq&ext':>8} {'!eq&!ext':>9}",
    ]
    for kind in EQUALITY_KINDS:
        c = summary.equality_census
        lines.append(
            f"  {kind:<8} {c[(kind, True, True)]:>8} {c[(kind, True, False)]:>8}"
            f" {c[(kind, False, True)]:>8} {c[(kind, False, False)]:>9}"
        )
    lines.append("")
    lines.append("strict-bound equality (data only): " + "  ".join(
        f"{k}={summary.strict_equality_census[k]}" for k in EQUALITY_KINDS))
    attained = summary.attaining("i_plus")
    if attained:
        lines.append("")
        lines.append("graphs attaining the i+ bound:")
        lines.extend(f"  {encode_sg(g)}" for g in attained)
    return "\n".join(lines)


def summary_records(summary: SuiteSummary) -> list[str]:
    """Summary line followed by one record per violation."""
    head = " ".join([
        "summary=1",
        f"skeletons={summary.graphs_checked}",
        f"signatures={summary.signatures_checked}",
        f"unions={summary.unions_checked}",
        f"lemma_checks={summary.lemma_checks}",
        f"violations={len(summary.violations)}",
        f"lemma_failures={len(summary.lemma_failures)}",
        f"truncated={_fmt(summary.truncated)}",
    ] + [
        f"census.{k}.{_fmt(a)}{_fmt(v)}={summary.equality_census[(k, a, v)]}"
        for k in EQUALITY_KINDS for a in (True, False) for v in (True, False)
    ])
    out = [head]
    out.extend(format_record(rep) for rep in summary.violations)
    out.extend(f"sg={encode_sg(g)} lemma_failure={msg.replace(' ', '_')}" for g, msg in summary.lemma_failures)
    return out
