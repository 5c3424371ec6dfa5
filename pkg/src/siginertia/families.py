"""Signed cycles and paths, their closed-form inertia, and the extremal recognizer."""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedGraph, connected_components, induced_subgraph
from .inertia import Inertia
from .structure import is_balanced


@dataclass(frozen=True)
class CycleSpec:
    length: int
    balanced: bool

    def __post_init__(self):
        if self.length < 3:
            raise ValueError(f"a cycle has at least 3 vertices, got {self.length}")


def make_cycle(spec: CycleSpec) -> SignedGraph:
    n = spec.length
    edges = [(i, i + 1, 1) for i in range(n - 1)]
    edges.append((0, n - 1, 1 if spec.balanced else -1))
    return SignedGraph.from_edges(n, edges)


def make_path(n: int) -> SignedGraph:
    if n < 1:
        raise ValueError(f"a path has at least one vertex, got {n}")
    return SignedGraph.from_edges(n, ((i, i + 1, 1) for i in range(n - 1)))


def cycle_inertia_formula(spec: CycleSpec) -> Inertia:
    n = spec.length
    h, lo, hi = n // 2, (n - 1) // 2, (n + 1) // 2
    if spec.balanced:
        table = {0: (h - 1, h - 1), 1: (hi, lo), 2: (h, h), 3: (lo, hi)}
    else:
        table = {0: (h, h), 1: (lo, hi), 2: (h - 1, h - 1), 3: (hi, lo)}
    pos, neg = table[n % 4]
    return Inertia(pos, neg, n - pos - neg)


def path_inertia_formula(n: int) -> Inertia:
    if n < 1:
        raise ValueError(f"a path has at least one vertex, got {n}")
    return Inertia(n // 2, n // 2, n % 2)


@dataclass(frozen=True)
class ExtremalCertificate:
    components: tuple[CycleSpec, ...]
    verdict: bool
    reason: str | None = None


def _as_cycle(h: SignedGraph) -> CycleSpec | None:
    if h.order < 3 or h.num_edges != h.order:
        return None
    if any(len(nb) != 2 for nb in h.adjacency):
        return None
    return CycleSpec(h.order, is_balanced(h))


def is_extremal_family(g: SignedGraph) -> ExtremalCertificate:
    """Is ``g`` a disjoint union of cycles, each balanced of length 0 mod 4
    or unbalanced of length 2 mod 4?

    Reason codes on a false verdict: ``isolated-vertex``,
    ``component-not-cycle``, ``wrong-residue`` (first applicable wins, in that
    order of precedence).
    """
    comps = connected_components(g)
    if any(len(c) < 2 for c in comps):
        return ExtremalCertificate((), False, "isolated-vertex")
    specs = []
    for c in comps:
        spec = _as_cycle(induced_subgraph(g, c))
        if spec is None:
            return ExtremalCertificate(tuple(specs), False, "component-not-cycle")
        specs.append(spec)
    for spec in specs:
        want = 0 if spec.balanced else 2
        if spec.length % 4 != want:
            return ExtremalCertificate(tuple(specs), False, "wrong-residue")
    return ExtremalCertificate(tuple(specs), True)
