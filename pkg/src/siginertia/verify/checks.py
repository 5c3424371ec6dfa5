"""Per-graph bound checks and deletion-lemma checks.

All bound arithmetic is done with :class:`fractions.Fraction`; the bounds
have halves in them and nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..core import (
    SignedGraph,
    connected_components,
    cyclomatic_number,
    degrees,
    delete_vertices,
    induced_subgraph,
    is_connected,
    vertex_local_stats,
)
from ..families import ExtremalCertificate, is_extremal_family
from ..inertia import Inertia, SymmetricExactMatrix, graph_inertia, inertia_by_congruence, principal_submatrix
from ..structure import is_cycle_disjoint

BOUND_STATUSES = (
    "i_plus_weak",
    "i_plus_strict",
    "i_minus_weak",
    "i_minus_strict",
    "nullity_weak",
    "nullity_strict",
)
EQUALITY_KINDS = ("i_plus", "i_minus", "nullity")
STATUS_NAMES = BOUND_STATUSES + tuple(f"{k}_equality" for k in EQUALITY_KINDS)


@dataclass(frozen=True)
class SkeletonFacts:
    """Sign-independent parameters, shared by every signature of one skeleton."""

    n: int
    m: int
    components: int
    p: int
    theta: int
    isolated: int
    cycle_disjoint: bool
    # recognizer certificate when it cannot depend on signs, else None
    fixed_certificate: ExtremalCertificate | None

    @classmethod
    def of(cls, g: SignedGraph) -> "SkeletonFacts":
        deg = degrees(g)
        comps = connected_components(g)
        cycle_union = all(d == 2 for d in deg)
        return cls(
            n=g.order,
            m=g.num_edges,
            components=len(comps),
            p=sum(1 for d in deg if d == 1),
            theta=g.num_edges - g.order + len(comps),
            isolated=sum(1 for d in deg if d == 0),
            cycle_disjoint=is_cycle_disjoint(g),
            fixed_certificate=None if cycle_union else is_extremal_family(g),
        )


@dataclass(frozen=True)
class TheoremReport:
    """Parameters, inertia and bound verdicts for one signed graph.

    Bounds and statuses are derived properties of the recorded numbers. A
    graph with isolated vertices is judged on its non-isolated part: each
    isolated vertex adds 1 to n and to eta and nothing to i+, i-, p or theta,
    so the bounds are shifted by that count. Equality flags are ``None`` for
    such graphs.
    """

    graph: SignedGraph
    n: int
    p: int
    theta: int
    inertia: Inertia
    isolated: int
    cycle_disjoint: bool
    extremal_verdict: bool
    extremal_reason: str | None = None

    @property
    def weak_bound(self) -> Fraction:
        return Fraction(self.n - self.p, 2) - self.theta

    @property
    def strict_applicable(self) -> bool:
        return self.p >= 1 or (not self.cycle_disjoint and self.theta >= 2)

    @property
    def strict_bound(self) -> Fraction:
        return Fraction(self.n - self.p + 1, 2) - self.theta

    @property
    def nullity_bound(self) -> int:
        return self.p + 2 * self.theta

    @property
    def equality_flags(self) -> dict[str, bool | None]:
        if self.isolated:
            return {k: None for k in EQUALITY_KINDS}
        return {
            "i_plus": self.inertia.positive == self.weak_bound,
            "i_minus": self.inertia.negative == self.weak_bound,
            "nullity": self.inertia.zero == self.nullity_bound,
        }

    @property
    def statuses(self) -> dict[str, bool | None]:
        shift = Fraction(self.isolated, 2)
        ip, im, eta = self.inertia.positive, self.inertia.negative, self.inertia.zero - self.isolated
        strict = self.strict_applicable
        out: dict[str, bool | None] = {
            "i_plus_weak": ip >= self.weak_bound - shift,
            "i_plus_strict": ip >= self.strict_bound - shift if strict else None,
            "i_minus_weak": im >= self.weak_bound - shift,
            "i_minus_strict": im >= self.strict_bound - shift if strict else None,
            "nullity_weak": eta <= self.nullity_bound,
            "nullity_strict": eta <= self.nullity_bound - 1 if strict else None,
        }
        for k, flag in self.equality_flags.items():
            out[f"{k}_equality"] = None if flag is None else flag == self.extremal_verdict
        return out

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.statuses.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.statuses.items() if v is False]


def report_for(facts: SkeletonFacts, g: SignedGraph, inertia: Inertia) -> TheoremReport:
    cert = facts.fixed_certificate or is_extremal_family(g)
    return TheoremReport(
        graph=g,
        n=facts.n,
        p=facts.p,
        theta=facts.theta,
        inertia=inertia,
        isolated=facts.isolated,
        cycle_disjoint=facts.cycle_disjoint,
        extremal_verdict=cert.verdict,
        extremal_reason=cert.reason,
    )


def check_bounds(g: SignedGraph) -> TheoremReport:
    if g.order < 2:
        raise ValueError("bound checks need a graph of order at least 2")
    return report_for(SkeletonFacts.of(g), g, graph_inertia(g))


LEMMAS = ("interlacing", "pendant", "additivity", "local_stats")


@dataclass
class LemmaCheck:
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


def check_deletion_lemmas(
    g: SignedGraph,
    lemmas: Iterable[str] = LEMMAS,
    inertia: Inertia | None = None,
) -> LemmaCheck:
    """Check the vertex-deletion facts the bounds rest on.

    * ``interlacing``: deleting any vertex never raises i+ or i-.
    * ``pendant``: deleting a pendant vertex and its neighbor drops i+ and
      i- by exactly one each and leaves eta unchanged.
    * ``additivity``: inertia is the sum over connected components.
    * ``local_stats``: on a connected graph, theta(G-x) = theta(G) - d(x) + s
      and d(x) >= m + s - r for every vertex x.
    """
    lemmas = set(lemmas)
    unknown = lemmas - set(LEMMAS)
    if unknown:
        raise ValueError(f"unknown lemma checks: {sorted(unknown)}")
    out = LemmaCheck()
    full = inertia if inertia is not None else graph_inertia(g)
    deg = degrees(g)

    if "interlacing" in lemmas:
        for x in range(g.order):
            sub = graph_inertia(delete_vertices(g, [x]).graph)
            out.checked += 1
            if sub.positive > full.positive or sub.negative > full.negative:
                out.failures.append(f"interlacing: deleting {x} gives {sub} vs {full}")

    if "pendant" in lemmas:
        for u in range(g.order):
            if deg[u] != 1:
                continue
            v = g.adjacency[u][0]
            sub = graph_inertia(delete_vertices(g, [u, v]).graph)
            out.checked += 1
            if sub + Inertia(1, 1, 0) != full:
                out.failures.append(f"pendant: deleting {u},{v} gives {sub} vs {full}")

    if "additivity" in lemmas:
        total = Inertia(0, 0, 0)
        for c in connected_components(g):
            total = total + graph_inertia(induced_subgraph(g, c))
        out.checked += 1
        if total != full:
            out.failures.append(f"additivity: components sum to {total} vs {full}")

    if "local_stats" in lemmas and g.order >= 2 and is_connected(g):
        theta = cyclomatic_number(g)
        for x in range(g.order):
            st = vertex_local_stats(g, x)
            rest = cyclomatic_number(delete_vertices(g, [x]).graph)
            out.checked += 1
            if rest != theta - st.degree + st.components_after_deletion:
                out.failures.append(f"local_stats: theta(G-{x})={rest} != {theta}-{st.degree}+{st.components_after_deletion}")
            d, s, m, r = st.degree, st.components_after_deletion, st.two_degree_neighbors, st.components_with_two_degree_neighbors
            if not (0 <= r <= m <= d and s >= 1 and d >= m + s - r):
                out.failures.append(f"local_stats: vertex {x} has d={d} s={s} m={m} r={r}")
    return out


def check_interlacing(a: SymmetricExactMatrix, keep: Iterable[int]) -> bool:
    """Inertia-level interlacing: a principal submatrix has no more positive
    (or negative) eigenvalues than the whole matrix."""
    whole = inertia_by_congruence(a)
    part = inertia_by_congruence(principal_submatrix(a, keep))
    return part.positive <= whole.positive and part.negative <= whole.negative

