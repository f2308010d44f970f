"""Derived combinatorial structures on a partition pair.

Includes the generic undirected graph used everywhere, the bipartite map
(one node per element and per block), the block intersection graph, the
support property check, and the cycle-removal step that turns any
support into a tree-based one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import BlockId, PartitionPair
from .errors import NotASupport, VertexSetMismatch


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on string vertex ids; no loops, no parallel edges."""

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]  # each edge stored as a sorted pair
    _adj: Mapping[str, frozenset[str]] = field(repr=False, compare=False, default=None)

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> SimpleGraph:
        vs = frozenset(vertices)
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")
            norm.add((u, v) if u < v else (v, u))
        adj: dict[str, set[str]] = {v: set() for v in vs}
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        return SimpleGraph(vs, frozenset(norm), {v: frozenset(ns) for v, ns in adj.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)

    def subgraph(self, keep: Iterable[str]) -> SimpleGraph:
        ks = frozenset(keep)
        return SimpleGraph.build(ks, [e for e in self.edges if e[0] in ks and e[1] in ks])

    def without_edge(self, u: str, v: str) -> SimpleGraph:
        e = (u, v) if u < v else (v, u)
        return SimpleGraph.build(self.vertices, self.edges - {e})

    def with_edges(self, extra: Iterable[tuple[str, str]]) -> SimpleGraph:
        return SimpleGraph.build(self.vertices, list(self.edges) + list(extra))

    def components(self) -> list[set[str]]:
        seen: set[str] = set()
        comps = []
        for start in self.sorted_vertices():
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected_subset(self, subset: Iterable[str]) -> bool:
        """Is the induced subgraph on `subset` connected?"""
        sub = set(subset)
        if not sub:
            return True
        start = next(iter(sub))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w in sub and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(sub)

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())


def element_vertex(e: str) -> str:
    return f"e:{e}"


def block_vertex(b: BlockId) -> str:
    return f"b{b.partition}:{b.name}"


@dataclass(frozen=True)
class BipartiteMap:
    """Bipartite incidence graph of a pair: element nodes vs block nodes."""

    graph: SimpleGraph
    side_elements: frozenset[str]
    side_blocks: frozenset[str]


@dataclass(frozen=True)
class BlockIntersectionGraph:
    """One node per block, an edge whenever two blocks share an element."""

    graph: SimpleGraph
    side0: frozenset[str]
    side1: frozenset[str]


@dataclass(frozen=True)
class SupportGraph:
    """A graph on the universe whose block-induced subgraphs are connected."""

    pair: PartitionPair
    graph: SimpleGraph

    @staticmethod
    def verified(pair: PartitionPair, graph: SimpleGraph) -> SupportGraph:
        ok, bad = is_support(graph, pair)
        if not ok:
            raise NotASupport(f"block {bad} induces a disconnected subgraph")
        return SupportGraph(pair, graph)


def bipartite_map(pair: PartitionPair) -> BipartiteMap:
    elements = [element_vertex(e) for e in pair.sorted_elements()]
    blocks = [block_vertex(b) for b in pair.all_block_ids()]
    edges = []
    for e in pair.sorted_elements():
        b0, b1 = pair.blocks_of(e)
        edges.append((element_vertex(e), block_vertex(b0)))
        edges.append((element_vertex(e), block_vertex(b1)))
    g = SimpleGraph.build(elements + blocks, edges)
    return BipartiteMap(g, frozenset(elements), frozenset(blocks))


def block_intersection_graph(pair: PartitionPair) -> BlockIntersectionGraph:
    side0 = [block_vertex(b) for b in pair.p0.block_ids()]
    side1 = [block_vertex(b) for b in pair.p1.block_ids()]
    edges = set()
    for e in pair.universe:
        b0, b1 = pair.blocks_of(e)
        edges.add((block_vertex(b0), block_vertex(b1)))
    g = SimpleGraph.build(side0 + side1, edges)
    return BlockIntersectionGraph(g, frozenset(side0), frozenset(side1))


def is_support(graph: SimpleGraph, pair: PartitionPair) -> tuple[bool, BlockId | None]:
    """Does every block induce a connected subgraph?

    Returns (True, None) or (False, first violating block) with blocks
    checked in (partition, name) order.
    """
    if graph.vertices != pair.universe:
        raise VertexSetMismatch("graph vertex set must equal the pair's universe")
    for block in pair.all_block_ids():
        if not graph.is_connected_subset(pair.block_elements(block)):
            return False, block
    return True, None


def candidate_edges(pair: PartitionPair) -> set[tuple[str, str]]:
    """All element pairs sharing a block of either partition.

    Any support can be pruned to these edges: an edge between elements
    with no common block never helps a block-induced subgraph.
    """
    out: set[tuple[str, str]] = set()
    for block in pair.all_block_ids():
        members = sorted(pair.block_elements(block))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                out.add((members[i], members[j]))
    return out


def _find_block_cycle(graph: SimpleGraph, members: frozenset[str]) -> list[str] | None:
    """Some cycle (as a vertex list) in the subgraph induced by members."""
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for start in sorted(members):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        stack = [start]
        while stack:
            v = stack[-1]
            advanced = False
            for w in sorted(graph.neighbors(v)):
                if w not in members or w == parent[v]:
                    continue
                if w in color:
                    if color[w] == 0:  # back edge: recover the cycle v .. w
                        cyc = [v]
                        x = v
                        while x != w:
                            x = parent[x]
                            cyc.append(x)
                        return cyc
                    continue
                color[w] = 0
                parent[w] = v
                stack.append(w)
                advanced = True
                break
            if not advanced:
                color[v] = 1
                stack.pop()
    return None


def reduce_to_tree_based(support: SupportGraph) -> SupportGraph:
    """Remove cycle edges block by block until every block induces a tree.

    When a cycle lies entirely inside one block of the other partition any
    edge of it may go; otherwise only an edge joining two different blocks
    of the other partition is removed. Either way the support property is
    preserved. Deterministic: blocks in id order, lexicographically
    smallest eligible edge first.
    """
    pair = support.pair
    ok, bad = is_support(support.graph, pair)
    if not ok:
        raise NotASupport(f"block {bad} induces a disconnected subgraph")

    graph = support.graph
    for block in pair.all_block_ids():
        members = pair.block_elements(block)
        other = pair.partition(1 - block.partition)
        while True:
            cycle = _find_block_cycle(graph, members)
            if cycle is None:
                break
            k = len(cycle)
            cycle_edges = sorted(
                tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k)
            )
            if len({other.block_of(v) for v in cycle}) == 1:
                drop = cycle_edges[0]
            else:
                drop = next(
                    e for e in cycle_edges if other.block_of(e[0]) != other.block_of(e[1])
                )
            graph = graph.without_edge(*drop)

    return SupportGraph(pair, graph)


# Graph exchange format (CLI debug dumps) -------------------------------------


def write_graph_text(graph: SimpleGraph) -> str:
    lines = [f"v {v}" for v in graph.sorted_vertices()]
    lines += [f"e {u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> SimpleGraph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise ValueError(f"line {lineno}: expected 'v <id>' or 'e <id> <id>'")
    return SimpleGraph.build(vertices, edges)
