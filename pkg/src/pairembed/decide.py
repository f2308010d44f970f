"""Deciders for weak, strong, and full embeddability.

Weak embeddability always holds. Full embeddability is planarity of the
bipartite map. Strong embeddability (NP-complete in general) is decided
exactly: a sound negative certificate is tried first, then an exhaustive
search over unions of one spanning tree per block, with planarity-based
pruning and an explicit budget of planarity tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator

from .core import PartitionPair
from .errors import TooLarge
from .graphs import (
    SimpleGraph,
    SupportGraph,
    bipartite_map,
    block_intersection_graph,
    block_vertex,
    candidate_edges,
    is_support,
)
from .planarity import is_planar

DEFAULT_BUDGET = 10**6


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


CERT_EXHAUSTED = "exhausted-search"
CERT_SUBDIVISION = "nonplanar-subdivision-core"


@dataclass(frozen=True)
class StrongDecision:
    verdict: Verdict
    witness: SupportGraph | None = None
    certificate: str | None = None
    core: SimpleGraph | None = None
    budget_spent: int = 0


@dataclass(frozen=True)
class HierarchyReport:
    weak: bool
    strong: StrongDecision
    full: bool


def decide_weak(pair: PartitionPair) -> bool:
    """Every pair of partitions is weakly embeddable."""
    return True


def decide_full(pair: PartitionPair) -> bool:
    """Fully embeddable iff the bipartite map is planar."""
    return is_planar(bipartite_map(pair).graph)


def subdivision_negative_certificate(pair: PartitionPair) -> SimpleGraph | None:
    """Sound proof of non-strong-embeddability via string graphs.

    If every block of one partition meets exactly two blocks of the
    other, the block intersection graph subdivides a core graph on the
    other partition's blocks. A 1-subdivision of a non-planar graph is
    not a string graph, while the block intersection graph of a strongly
    embeddable pair always is; a non-planar core therefore rules strong
    embeddability out. Returns the core, or None (which proves nothing).
    """
    gs = block_intersection_graph(pair)
    for subdividers, core_side in ((gs.side1, gs.side0), (gs.side0, gs.side1)):
        if not subdividers:
            continue
        if any(gs.graph.degree(v) != 2 for v in subdividers):
            continue
        core_edges = set()
        for v in sorted(subdividers):
            a, b = sorted(gs.graph.neighbors(v))
            core_edges.add((a, b))
        core = SimpleGraph.build(core_side, core_edges)
        if not is_planar(core):
            return core
    return None


def _spanning_trees(elements: list[str]) -> Iterator[list[tuple[str, str]]]:
    """All spanning trees of the complete graph on `elements`.

    Enumerated via Pruefer sequences in lexicographic order (labels are
    list positions), so the iteration order is deterministic.
    """
    n = len(elements)
    if n <= 1:
        yield []
        return
    if n == 2:
        yield [(elements[0], elements[1])]
        return

    def decode(seq: tuple[int, ...]) -> list[tuple[str, str]]:
        degree = [1] * n
        for s in seq:
            degree[s] += 1
        edges = []
        ptr = 0
        leaf = -1
        for s in seq:
            if leaf < 0:
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
            edges.append((elements[leaf], elements[s]))
            degree[leaf] -= 1
            degree[s] -= 1
            if degree[s] == 1 and s < ptr:
                leaf = s
            else:
                leaf = -1
        last = [i for i in range(n) if degree[i] == 1]
        edges.append((elements[last[0]], elements[last[1]]))
        return edges

    def sequences(prefix: list[int], k: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield tuple(prefix)
            return
        for s in range(n):
            prefix.append(s)
            yield from sequences(prefix, k - 1)
            prefix.pop()

    for seq in sequences([], n - 2):
        yield decode(seq)


class _BudgetExceeded(Exception):
    pass


class _PlanarityCounter:
    def __init__(self, budget: int):
        self.budget = budget
        self.spent = 0

    def test(self, graph: SimpleGraph) -> bool:
        if self.spent >= self.budget:
            raise _BudgetExceeded
        self.spent += 1
        return is_planar(graph)


def _star_union_witness(pair: PartitionPair) -> SimpleGraph:
    """Support for a fully embeddable pair: one star per block.

    Contracting each block vertex of the planar bipartite map into one of
    its elements yields exactly this union of stars, so it is planar.
    """
    edges = set()
    for block in pair.all_block_ids():
        members = sorted(pair.block_elements(block))
        center = members[0]
        for other in members[1:]:
            edges.add((center, other))
    return SimpleGraph.build(pair.universe, edges)


def decide_strong(pair: PartitionPair, budget: int = DEFAULT_BUDGET) -> StrongDecision:
    """Exact strong-embeddability decision with verified witnesses.

    Order of attack: the subdivision certificate (linear time), the
    full-embeddability shortcut (full implies strong), then exhaustive
    search over unions of one spanning tree per block. Each candidate
    union is tested for planarity; a non-planar partial union prunes the
    whole branch. The budget counts planarity tests; exceeding it gives
    verdict UNKNOWN.
    """
    core = subdivision_negative_certificate(pair)
    if core is not None:
        return StrongDecision(Verdict.NO, certificate=CERT_SUBDIVISION, core=core)

    counter = _PlanarityCounter(budget)
    try:
        if counter.test(bipartite_map(pair).graph):
            witness = _star_union_witness(pair)
            ok, _ = is_support(witness, pair)
            if ok and counter.test(witness):
                return StrongDecision(
                    Verdict.YES,
                    witness=SupportGraph(pair, witness),
                    budget_spent=counter.spent,
                )

        blocks = sorted(
            pair.all_block_ids(),
            key=lambda b: (-len(pair.block_elements(b)), b.partition, b.name),
        )
        member_lists = [sorted(pair.block_elements(b)) for b in blocks]
        universe = pair.universe

        def search(level: int, edge_count: dict[tuple[str, str], int]) -> SimpleGraph | None:
            if level == len(blocks):
                return SimpleGraph.build(universe, edge_count.keys())
            for tree in _spanning_trees(member_lists[level]):
                added = []
                for e in tree:
                    edge_count[e] = edge_count.get(e, 0) + 1
                    added.append(e)
                partial = SimpleGraph.build(universe, edge_count.keys())
                if counter.test(partial):
                    found = search(level + 1, edge_count)
                    if found is not None:
                        return found
                for e in added:
                    edge_count[e] -= 1
                    if edge_count[e] == 0:
                        del edge_count[e]
            return None

        found = search(0, {})
    except _BudgetExceeded:
        return StrongDecision(Verdict.UNKNOWN, budget_spent=counter.spent)

    if found is None:
        return StrongDecision(
            Verdict.NO, certificate=CERT_EXHAUSTED, budget_spent=counter.spent
        )
    # re-verify the witness rather than trusting the search
    ok, bad = is_support(found, pair)
    if not ok or not is_planar(found):
        raise AssertionError(f"search produced an invalid witness (block {bad})")
    return StrongDecision(
        Verdict.YES, witness=SupportGraph(pair, found), budget_spent=counter.spent
    )


def decide_strong_bruteforce(pair: PartitionPair, max_edges: int = 22) -> bool:
    """Independent oracle: search all subsets of the candidate edges.

    Sound pruning only: supersets of non-supports stay non-supports read
    backwards (subsets of the branch maximum), subgraphs of planar graphs
    stay planar. The answer equals exhaustive subset enumeration.
    """
    edges = sorted(candidate_edges(pair))
    if len(edges) > max_edges:
        raise TooLarge(f"{len(edges)} candidate edges exceed the soft limit {max_edges}")
    universe = pair.universe

    def supp(es: list[tuple[str, str]]) -> bool:
        ok, _ = is_support(SimpleGraph.build(universe, es), pair)
        return ok

    def planar(es: list[tuple[str, str]]) -> bool:
        return is_planar(SimpleGraph.build(universe, es))

    def search(chosen: list[tuple[str, str]], rest: list[tuple[str, str]]) -> bool:
        if not supp(chosen + rest):
            return False
        if not planar(chosen):
            return False
        if planar(chosen + rest):
            return True
        head, tail = rest[0], rest[1:]
        return search(chosen, tail) or search(chosen + [head], tail)

    return search([], edges)


def classify(pair: PartitionPair, budget: int = DEFAULT_BUDGET) -> HierarchyReport:
    """Hierarchy report {weak, strong, full} for one pair."""
    return HierarchyReport(
        weak=decide_weak(pair),
        strong=decide_strong(pair, budget),
        full=decide_full(pair),
    )
