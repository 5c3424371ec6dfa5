"""Sign and topological structure of signed graphs.

Balance is decided with a +/-1 vertex potential over a spanning forest;
cycle-disjointness and the contraction tree come from the block
decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import SignedGraph, connected_components, is_connected


class UnsupportedStructureError(ValueError):
    """Input graph lacks the structure an operation depends on."""


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)


def _validate_cycle(g: SignedGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = tuple(cycle)
    if len(cyc) < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {len(cyc)}")
    if len(set(cyc)) != len(cyc):
        raise ValueError("cycle repeats a vertex")
    for v in cyc:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not g.has_edge(a, b):
            raise ValueError(f"{a} and {b} are not adjacent")
    return cyc


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    cyc = _validate_cycle(g, cycle)
    s = 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        s *= g.sign(a, b)
    return s


def _potential(g: SignedGraph) -> tuple[list[int], list[int]]:
    """BFS potential and parent over a spanning forest (roots have parent -1)."""
    pot = [0] * g.order
    parent = [-1] * g.order
    adj = g.adjacency
    for root in range(g.order):
        if pot[root]:
            continue
        pot[root] = 1
        queue = [root]
        for x in queue:
            for y in adj[x]:
                if not pot[y]:
                    pot[y] = pot[x] * g.sign(x, y)
                    parent[y] = x
                    queue.append(y)
    return pot, parent


def is_balanced(g: SignedGraph) -> bool:
    pot, _ = _potential(g)
    return all(s == pot[u] * pot[v] for u, v, s in g.edges)


def fundamental_cycles(g: SignedGraph) -> list[CycleWitness]:
    """One cycle per non-forest edge of a BFS spanning forest (a cycle basis)."""
    _, parent = _potential(g)
    depth = [0] * g.order
    for v in _bfs_order(g, parent):
        if parent[v] >= 0:
            depth[v] = depth[parent[v]] + 1
    out = []
    for u, v, _ in g.edges:
        if parent[u] == v or parent[v] == u:
            continue
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            left.append(a)
            right.append(b)
        cyc = left + right[-2::-1]
        out.append(CycleWitness(tuple(cyc), cycle_sign(g, cyc)))
    return out


def _bfs_order(g: SignedGraph, parent: list[int]) -> list[int]:
    children: list[list[int]] = [[] for _ in range(g.order)]
    roots = []
    for v, p in enumerate(parent):
        (children[p] if p >= 0 else roots).append(v)
    out = list(roots)
    for x in out:
        out.extend(children[x])
    return out


def switch(g: SignedGraph, u: Iterable[int]) -> SignedGraph:
    flip = set(u)
    for v in flip:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    return SignedGraph(g.order, tuple((a, b, -s if (a in flip) != (b in flip) else s) for a, b, s in g.edges))


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.order, tuple((a, b, -s) for a, b, s in g.edges))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces and bridges) plus cut vertices.

    Isolated vertices belong to no block.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_edges: tuple[int, ...]  # edge count per block, parallel to ``blocks``


def block_decomposition(g: SignedGraph) -> BlockDecomposition:
    """Iterative Hopcroft-Tarjan lowpoint search with an edge stack."""
    n = g.order
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    bedges: list[int] = []
    cuts: set[int] = set()
    t = 0
    for root in range(n):
        if disc[root] >= 0 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, par, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != par and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if par < 0:
                continue
            low[par] = min(low[par], low[v])
            if low[v] >= disc[par]:
                if par != root:
                    cuts.add(par)
                verts = set()
                count = 0
                while True:
                    e = edge_stack.pop()
                    verts.update(e)
                    count += 1
                    if e == (par, v):
                        break
                blocks.append(frozenset(verts))
                bedges.append(count)
        if root_children > 1:
            cuts.add(root)
    order = sorted(range(len(blocks)), key=lambda i: sorted(blocks[i]))
    return BlockDecomposition(
        tuple(blocks[i] for i in order), frozenset(cuts), tuple(bedges[i] for i in order)
    )


def is_cycle_disjoint(g: SignedGraph) -> bool:
    """No two distinct cycles share a vertex.

    Every cycle lives inside one block, so this holds iff each block carries
    at most one cycle (a cactus) and no vertex sits on two cycle blocks.
    """
    bd = block_decomposition(g)
    on_cycle: set[int] = set()
    for b, e in zip(bd.blocks, bd.block_edges):
        if e > len(b):
            return False
        if e == len(b):
            if on_cycle & b:
                return False
            on_cycle |= b
    return True


def _cycle_order(g: SignedGraph, verts: frozenset[int]) -> tuple[int, ...]:
    start = min(verts)
    nbrs = sorted(w for w in g.adjacency[start] if w in verts)
    seq = [start, nbrs[0]]
    while len(seq) < len(verts):
        cur, prev = seq[-1], seq[-2]
        nxt = next(w for w in g.adjacency[cur] if w in verts and w != prev)
        seq.append(nxt)
    return tuple(seq)


def cycle_blocks(g: SignedGraph) -> list[CycleWitness]:
    """The cycles of a cycle-disjoint graph, one per block with cyclomatic number 1."""
    bd = block_decomposition(g)
    out = []
    for b, e in zip(bd.blocks, bd.block_edges):
        if e == len(b) and len(b) >= 3:
            cyc = _cycle_order(g, b)
            out.append(CycleWitness(cyc, cycle_sign(g, cyc)))
    return out


@dataclass(frozen=True)
class TreeNode:
    """Either an original vertex (``cycle is None``) or a contracted cycle."""

    vertex: int | None = None
    cycle: CycleWitness | None = None

    @property
    def is_cycle(self) -> bool:
        return self.cycle is not None

    def label(self) -> str:
        if self.cycle is None:
            return f"v{self.vertex}"
        sign = "+" if self.cycle.sign > 0 else "-"
        return "C[" + ",".join(map(str, self.cycle.vertices)) + "]" + sign


@dataclass(frozen=True)
class ContractionTree:
    nodes: tuple[TreeNode, ...]
    edges: tuple[tuple[int, int], ...]
    mapping: tuple[int, ...]  # host vertex -> node index

    def is_tree(self) -> bool:
        k = len(self.nodes)
        if k == 0 or len(self.edges) != k - 1:
            return False
        adj: list[list[int]] = [[] for _ in range(k)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == k


def contraction_tree(g: SignedGraph) -> ContractionTree:
    """Collapse every cycle of a connected cycle-disjoint graph to one node."""
    if not is_connected(g):
        raise ValueError("contraction_tree needs a connected graph")
    if not is_cycle_disjoint(g):
        raise UnsupportedStructureError("graph has two cycles sharing a vertex")
    cycles = cycle_blocks(g)
    owner: dict[int, CycleWitness] = {}
    for c in cycles:
        for v in c.vertices:
            owner[v] = c
    # nodes are ordered by the smallest host vertex they contain
    nodes: list[TreeNode] = []
    mapping = [-1] * g.order
    for v in range(g.order):
        if mapping[v] >= 0:
            continue
        if v in owner:
            c = owner[v]
            idx = len(nodes)
            nodes.append(TreeNode(cycle=c))
            for w in c.vertices:
                mapping[w] = idx
        else:
            mapping[v] = len(nodes)
            nodes.append(TreeNode(vertex=v))
    edges = set()
    for u, v, _ in g.edges:
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    tree = ContractionTree(tuple(nodes), tuple(sorted(edges)), tuple(mapping))
    if not tree.is_tree():
        raise AssertionError("contraction of a cycle-disjoint connected graph is not a tree")
    return tree


def component_balance(g: SignedGraph) -> list[bool]:
    """Balance flag per connected component, in component order."""
    pot, _ = _potential(g)
    comp_of = {}
    comps = connected_components(g)
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    flags = [True] * len(comps)
    for u, v, s in g.edges:
        if s != pot[u] * pot[v]:
            flags[comp_of[u]] = False
    return flags
