"""Exhaustive verification over all small signed graphs."""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..core import SignedGraph, disjoint_union
from ..inertia import graph_inertia
from .checks import EQUALITY_KINDS, LEMMAS, SkeletonFacts, TheoremReport, check_deletion_lemmas, report_for
from .enumerate import HARD_CAP, enumerate_underlying_graphs, signature_representatives

DEFAULT_MAX_N = 7


@dataclass(frozen=True)
class SuiteOptions:
    connected_only: bool = True
    include_n8: bool = False
    lemmas: tuple[str, ...] = LEMMAS
    lemma_rate: float = 1.0  # fraction of signatures that get the deletion-lemma checks
    sample_unions: int = 0
    seed: int = 0
    max_signatures: int | None = None
    workers: int = 1


@dataclass
class SuiteSummary:
    graphs_checked: int = 0
    signatures_checked: int = 0
    unions_checked: int = 0
    lemma_checks: int = 0
    violations: list[TheoremReport] = field(default_factory=list)
    lemma_failures: list[tuple[SignedGraph, str]] = field(default_factory=list)
    # (kind, attained, verdict) -> count, over graphs without isolated vertices
    equality_census: Counter = field(default_factory=Counter)
    # kind -> count of graphs meeting the strict bound exactly (reported, not judged)
    strict_equality_census: Counter = field(default_factory=Counter)
    equality_graphs: dict[str, list[SignedGraph]] = field(default_factory=lambda: {k: [] for k in EQUALITY_KINDS})
    extremal_graphs: list[SignedGraph] = field(default_factory=list)  # recognizer verdict true
    per_order: Counter = field(default_factory=Counter)  # n -> signatures checked
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations and not self.lemma_failures

    def merge(self, other: "SuiteSummary") -> "SuiteSummary":
        self.graphs_checked += other.graphs_checked
        self.signatures_checked += other.signatures_checked
        self.unions_checked += other.unions_checked
        self.lemma_checks += other.lemma_checks
        self.violations.extend(other.violations)
        self.lemma_failures.extend(other.lemma_failures)
        self.equality_census.update(other.equality_census)
        self.strict_equality_census.update(other.strict_equality_census)
        for k, gs in other.equality_graphs.items():
            self.equality_graphs.setdefault(k, []).extend(gs)
        self.extremal_graphs.extend(other.extremal_graphs)
        self.per_order.update(other.per_order)
        self.truncated = self.truncated or other.truncated
        return self

    def attaining(self, kind: str) -> list[SignedGraph]:
        return self.equality_graphs.get(kind, [])


def _record(summary: SuiteSummary, rep: TheoremReport) -> None:
    if not rep.passed:
        summary.violations.append(rep)
    flags = rep.equality_flags
    if rep.extremal_verdict:
        summary.extremal_graphs.append(rep.graph)
    for kind in EQUALITY_KINDS:
        flag = flags[kind]
        if flag is None:
            continue
        summary.equality_census[(kind, flag, rep.extremal_verdict)] += 1
        if flag:
            summary.equality_graphs[kind].append(rep.graph)
    if rep.strict_applicable and not rep.isolated:
        ip, im, eta = rep.inertia.as_tuple()
        summary.strict_equality_census["i_plus"] += ip == rep.strict_bound
        summary.strict_equality_census["i_minus"] += im == rep.strict_bound
        summary.strict_equality_census["nullity"] += eta == rep.nullity_bound - 1


def check_signed_graph(
    g: SignedGraph,
    facts: SkeletonFacts,
    summary: SuiteSummary,
    lemmas: tuple[str, ...],
) -> None:
    inertia = graph_inertia(g)
    _record(summary, report_for(facts, g, inertia))
    if lemmas:
        lc = check_deletion_lemmas(g, lemmas, inertia=inertia)
        summary.lemma_checks += lc.checked
        summary.lemma_failures.extend((g, msg) for msg in lc.failures)


def _check_skeleton(args) -> SuiteSummary:
    skel, index, options, budget = args
    summary = SuiteSummary(graphs_checked=1)
    facts = SkeletonFacts.of(skel)
    rng = random.Random(f"{options.seed}:{skel.order}:{index}")
    for k, g in enumerate(signature_representatives(skel)):
        if budget is not None and k >= budget:
            summary.truncated = True
            break
        lemmas = options.lemmas
        if k and "local_stats" in lemmas:
            # sign-independent; once per skeleton is enough
            lemmas = tuple(x for x in lemmas if x != "local_stats")
        if options.lemma_rate < 1.0 and rng.random() >= options.lemma_rate:
            lemmas = ()
        check_signed_graph(g, facts, summary, lemmas)
        summary.signatures_checked += 1
        summary.per_order[skel.order] += 1
    return summary


def _units(max_n: int, options: SuiteOptions):
    for n in range(2, max_n + 1):
        for index, skel in enumerate(enumerate_underlying_graphs(n, connected_only=options.connected_only)):
            yield skel, index


def _random_signature(skel: SignedGraph, rng: random.Random) -> SignedGraph:
    return skel.with_signs(rng.choice((1, -1)) for _ in skel.edges)


def sample_unions(max_n: int, count: int, seed: int, options: SuiteOptions) -> SuiteSummary:
    """Check ``count`` random disjoint unions of two connected signed graphs."""
    summary = SuiteSummary()
    rng = random.Random(f"unions:{seed}")
    pool = [g for n in range(2, max_n + 1) for g in enumerate_underlying_graphs(n, connected_only=True)]
    for _ in range(count):
        a, b = rng.choice(pool), rng.choice(pool)
        g = disjoint_union(_random_signature(a, rng), _random_signature(b, rng))
        check_signed_graph(g, SkeletonFacts.of(g), summary, tuple(x for x in options.lemmas if x != "interlacing"))
        summary.unions_checked += 1
    return summary


def run_suite(max_n: int = DEFAULT_MAX_N, options: SuiteOptions | None = None) -> SuiteSummary:
    """Check every signature representative of every skeleton on 2..max_n vertices.

    Each skeleton is an independent work unit; results are merged in
    enumeration order, so the summary is deterministic for any worker count.
    """
    options = options or SuiteOptions()
    cap = HARD_CAP if options.include_n8 else DEFAULT_MAX_N
    if not 2 <= max_n <= cap:
        hint = "" if options.include_n8 or max_n > HARD_CAP else " (n=8 needs include_n8)"
        raise ValueError(f"max_n must lie in 2..{cap}{hint}")

    summary = SuiteSummary()
    remaining = options.max_signatures
    units = list(_units(max_n, options))
    if options.workers > 1 and remaining is None:
        with ProcessPoolExecutor(options.workers) as pool:
            parts = pool.map(_check_skeleton, [(s, i, options, None) for s, i in units], chunksize=16)
            for part in parts:
                summary.merge(part)
    else:
        for skel, index in units:
            if remaining is not None and remaining <= 0:
                summary.truncated = True
                break
            part = _check_skeleton((skel, index, options, remaining))
            summary.merge(part)
            if remaining is not None:
                remaining -= part.signatures_checked
    if options.sample_unions:
        summary.merge(sample_unions(max_n, options.sample_unions, options.seed, options))
    return summary
