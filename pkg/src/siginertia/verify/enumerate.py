"""Small-graph enumeration up to isomorphism and switching-class signatures.

Graphs on n vertices are grown from graphs on n - 1 vertices by adding one
vertex with every possible neighborhood, then deduplicated by a canonical
form. The canonical form is the minimum adjacency code over the leaves of an
individualization-refinement search tree; colour refinement is
label-equivariant, so the minimum is an isomorphism invariant.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from ..core import SignedGraph, is_connected
from ..structure import _potential

HARD_CAP = 8


def _masks(order: int, pairs) -> list[int]:
    adj = [0] * order
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into each cell."""
    cells = [list(c) for c in cells]
    i = 0
    while i < len(cells):
        smask = 0
        for v in cells[i]:
            smask |= 1 << v
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        # a split can make earlier splitters informative again
        i = 0 if split else i + 1
    return cells


def _code(adj: list[int], perm: list[int]) -> int:
    n = len(perm)
    code = 0
    bit = 0
    for i in range(n):
        ai = adj[perm[i]]
        for j in range(i + 1, n):
            if ai >> perm[j] & 1:
                code |= 1 << bit
            bit += 1
    return code


def _twin_reps(adj: list[int], cell: list[int]) -> list[int]:
    # swapping two twins is an automorphism that fixes the partition, so
    # individualizing either one reaches the same leaf codes
    reps = []
    for v in cell:
        if not any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in reps):
            reps.append(v)
    return reps


def canonical_form(order: int, pairs) -> tuple[int, list[int]]:
    """Return ``(code, perm)`` where ``perm[k]`` is the vertex placed at position k."""
    adj = _masks(order, pairs)
    if order == 0:
        return 0, []
    best: list = [None, None]

    def search(cells):
        cells = _refine(adj, cells)
        k = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if k is None:
            perm = [c[0] for c in cells]
            code = _code(adj, perm)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, perm
            return
        cell = cells[k]
        for v in _twin_reps(adj, cell):
            rest = [w for w in cell if w != v]
            search(cells[:k] + [[v], rest] + cells[k + 1:])

    search([list(range(order))])
    return best[0], best[1]


def _decode(order: int, code: int) -> list[tuple[int, int]]:
    pairs = []
    bit = 0
    for i in range(order):
        for j in range(i + 1, order):
            if code >> bit & 1:
                pairs.append((i, j))
            bit += 1
    return pairs


@lru_cache(maxsize=None)
def _all_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of every simple graph on n vertices, sorted."""
    if n <= 1:
        return (0,)
    codes = set()
    for code in _all_codes(n - 1):
        base = _decode(n - 1, code)
        for mask in range(1 << (n - 1)):
            pairs = base + [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            codes.add(canonical_form(n, pairs)[0])
    return tuple(sorted(codes))


def enumerate_underlying_graphs(n: int, connected_only: bool = True, cap: int = HARD_CAP) -> Iterator[SignedGraph]:
    """One all-positive representative per isomorphism class on ``n`` vertices.

    Output order is deterministic: by edge count, then canonical code.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap of {cap}; graph counts explode past it")
    graphs = [SignedGraph.unsigned(n, _decode(n, c)) for c in _all_codes(n)]
    graphs.sort(key=lambda g: (g.num_edges, canonical_form(n, g.pairs())[0]))
    for g in graphs:
        if not connected_only or is_connected(g):
            yield g


def spanning_forest_edges(g: SignedGraph) -> list[int]:
    """Indices (into ``g.edges``) of a BFS spanning forest."""
    _, parent = _potential(g)
    return [i for i, (u, v, _) in enumerate(g.edges) if parent[u] == v or parent[v] == u]


def signature_representatives(g: SignedGraph) -> Iterator[SignedGraph]:
    """All 2**theta signatures that are positive on a fixed spanning forest.

    Every signature of ``g`` is switching-equivalent to exactly one of them.
    """
    tree = set(spanning_forest_edges(g))
    free = [i for i in range(g.num_edges) if i not in tree]
    for choice in product((1, -1), repeat=len(free)):
        signs = [1] * g.num_edges
        for i, s in zip(free, choice):
            signs[i] = s
        yield g.with_signs(signs)


def switching_class_representative(g: SignedGraph) -> SignedGraph:
    """Switch ``g`` so that every spanning-forest edge is positive."""
    pot, _ = _potential(g)
    return SignedGraph(g.order, tuple((u, v, s * pot[u] * pot[v]) for u, v, s in g.edges))
