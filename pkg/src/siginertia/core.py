"""Signed-graph data model and the purely combinatorial parameters.

Vertices are dense indices ``0..n-1``. Edge signs are the integers +1 / -1,
so a sign doubles as the adjacency-matrix entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph with a +1/-1 sign on every edge.

    ``edges`` is a sorted tuple of ``(u, v, sign)`` with ``u < v``. Use
    :meth:`from_edges` to build one from loosely ordered input.
    """

    order: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        seen = set()
        prev = None
        for e in self.edges:
            u, v, s = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.order):
                raise ValueError(f"edge {(u, v)} is not a normalized pair of vertices in 0..{self.order - 1}")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s!r}")
            if (u, v) in seen:
                raise ValueError(f"parallel edge {(u, v)}")
            if prev is not None and (u, v) < prev:
                raise ValueError("edges must be sorted; use SignedGraph.from_edges")
            seen.add((u, v))
            prev = (u, v)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int, int]] = ()) -> "SignedGraph":
        norm = []
        for u, v, s in edges:
            if u > v:
                u, v = v, u
            norm.append((u, v, s))
        norm.sort()
        return cls(order, tuple(norm))

    @classmethod
    def unsigned(cls, order: int, pairs: Iterable[tuple[int, int]]) -> "SignedGraph":
        """All-positive graph on the given vertex pairs."""
        return cls.from_edges(order, ((u, v, 1) for u, v in pairs))

    @cached_property
    def _sign_map(self) -> Mapping[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, indexed by vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.order)]
        for u, v, _ in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._sign_map

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv`` (symmetric); KeyError if absent."""
        if u > v:
            u, v = v, u
        return self._sign_map[(u, v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self, v)
        return self.adjacency[v]

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def with_signs(self, signs: Iterable[int]) -> "SignedGraph":
        """Same skeleton, new signs (in edge order)."""
        return SignedGraph(self.order, tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs, strict=True)))


@dataclass(frozen=True)
class VertexLocalStats:
    """Local quantities around a vertex x of a connected graph.

    ``components_after_deletion`` counts the components of G - x,
    ``two_degree_neighbors`` the neighbors of x that have degree 2 in G, and
    ``components_with_two_degree_neighbors`` how many components of G - x
    contain at least one of them.
    """

    vertex: int
    degree: int
    components_after_deletion: int
    two_degree_neighbors: int
    components_with_two_degree_neighbors: int


@dataclass(frozen=True)
class VertexDeletion:
    """Result of :func:`delete_vertices`: the induced subgraph and the index map."""

    graph: SignedGraph
    # old vertex -> new vertex, only for survivors
    mapping: dict[int, int] = field(default_factory=dict)


def _check_vertex(g: SignedGraph, v: int) -> None:
    if not (0 <= v < g.order):
        raise ValueError(f"vertex {v} out of range for graph of order {g.order}")


def degree(g: SignedGraph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adjacency[v])


def degrees(g: SignedGraph) -> list[int]:
    return [len(nb) for nb in g.adjacency]


def pendant_count(g: SignedGraph) -> int:
    return sum(1 for nb in g.adjacency if len(nb) == 1)


def connected_components(g: SignedGraph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.order
    comps = []
    adj = g.adjacency
    for start in range(g.order):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.order > 0 and len(connected_components(g)) == 1


def cyclomatic_number(g: SignedGraph) -> int:
    return g.num_edges - g.order + len(connected_components(g))


def delete_vertices(g: SignedGraph, u: Iterable[int]) -> VertexDeletion:
    gone = set(u)
    for v in gone:
        _check_vertex(g, v)
    keep = [v for v in range(g.order) if v not in gone]
    mapping = {old: new for new, old in enumerate(keep)}
    edges = tuple(
        (mapping[a], mapping[b], s) for a, b, s in g.edges if a in mapping and b in mapping
    )
    # relabelling is monotone, so edge order survives
    return VertexDeletion(SignedGraph(len(keep), edges), mapping)


def induced_subgraph(g: SignedGraph, keep: Iterable[int]) -> SignedGraph:
    keep = set(keep)
    return delete_vertices(g, [v for v in range(g.order) if v not in keep]).graph


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset, s) for u, v, s in h.edges)
        offset += h.order
    return SignedGraph(offset, tuple(edges))


def vertex_local_stats(g: SignedGraph, x: int) -> VertexLocalStats:
    _check_vertex(g, x)
    if g.order < 2 or not is_connected(g):
        raise ValueError("vertex_local_stats needs a connected graph with at least 2 vertices")
    deg = degrees(g)
    rest = delete_vertices(g, [x])
    comps = connected_components(rest.graph)
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    twos = [y for y in g.adjacency[x] if deg[y] == 2]
    return VertexLocalStats(
        vertex=x,
        degree=deg[x],
        components_after_deletion=len(comps),
        two_degree_neighbors=len(twos),
        components_with_two_degree_neighbors=len({where[rest.mapping[y]] for y in twos}),
    )


# ---------------------------------------------------------------------------
# .sg text format

class SgParseError(ValueError):
    """Malformed ``.sg`` input; carries 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


def _tokens(text: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(text):
        if text[i] in " \t":
            i += 1
            continue
        j = i
        while j < len(text) and text[j] not in " \t":
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


def _parse_count(tok: str, col: int, lineno: int, what: str) -> int:
    if not tok.isdigit() or not tok.isascii():
        raise SgParseError(lineno, col, f"expected non-negative decimal {what}, got {tok!r}")
    return int(tok)


def parse_sg(text: str) -> SignedGraph:
    """Parse the ``.sg`` format: header ``n m`` then ``m`` lines ``u v s``."""
    header = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(line)
        if header is None:
            if len(toks) != 2:
                raise SgParseError(lineno, 1, "header must be 'n m'")
            n = _parse_count(toks[0][0], toks[0][1], lineno, "vertex count")
            m = _parse_count(toks[1][0], toks[1][1], lineno, "edge count")
            if m > n * (n - 1) // 2:
                raise SgParseError(lineno, toks[1][1], f"{m} edges cannot fit a simple graph on {n} vertices")
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise SgParseError(lineno, 1, f"more than the declared {m} edge lines")
        if len(toks) != 3:
            raise SgParseError(lineno, 1, "edge line must be 'u v s'")
        u = _parse_count(toks[0][0], toks[0][1], lineno, "vertex index")
        v = _parse_count(toks[1][0], toks[1][1], lineno, "vertex index")
        if u >= n:
            raise SgParseError(lineno, toks[0][1], f"vertex {u} out of range (n={n})")
        if v >= n:
            raise SgParseError(lineno, toks[1][1], f"vertex {v} out of range (n={n})")
        if u == v:
            raise SgParseError(lineno, toks[1][1], f"self-loop at vertex {u}")
        if u > v:
            raise SgParseError(lineno, toks[0][1], f"pair must satisfy u < v, got {u} {v}")
        if (u, v) in seen:
            raise SgParseError(lineno, toks[0][1], f"duplicate edge {u} {v}")
        stok, scol = toks[2]
        if stok not in ("+", "-"):
            raise SgParseError(lineno, scol, f"sign must be '+' or '-', got {stok!r}")
        seen.add((u, v))
        edges.append((u, v, 1 if stok == "+" else -1))
    if header is None:
        raise SgParseError(max(last_line, 1), 1, "missing header line")
    if len(edges) != header[1]:
        raise SgParseError(max(last_line, 1), 1, f"declared {header[1]} edges, found {len(edges)}")
    return SignedGraph.from_edges(header[0], edges)


def format_sg(g: SignedGraph) -> str:
    lines = [f"{g.order} {g.num_edges}"]
    lines.extend(f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges)
    return "\n".join(lines) + "\n"
