"""Planarity decision and combinatorial embeddings.

The main decision procedure is the left-right planarity criterion with
DFS orientation (Brandes' formulation), including extraction of a
rotation system. An independent brute-force oracle searches exhaustively
for K5 / K3,3 subdivisions and is used to cross-check the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import NotPlanar, TooLarge
from .graphs import SimpleGraph

DirectedEdge = tuple[str, str]


@dataclass(frozen=True)
class CombinatorialEmbedding:
    """Rotation system plus the face cycles it induces.

    `rotation` lists each vertex's neighbors in clockwise order. `faces`
    holds one directed-edge cycle per face, grouped per connected
    component; an isolated vertex contributes one empty cycle.
    """

    graph: SimpleGraph
    rotation: Mapping[str, tuple[str, ...]]
    faces: tuple[tuple[DirectedEdge, ...], ...]

    @property
    def n_faces(self) -> int:
        return len(self.faces)


def _faces_from_rotation(
    graph: SimpleGraph, rotation: Mapping[str, tuple[str, ...]]
) -> tuple[tuple[DirectedEdge, ...], ...]:
    index: dict[str, dict[str, int]] = {
        v: {w: i for i, w in enumerate(neigh)} for v, neigh in rotation.items()
    }
    faces: list[tuple[DirectedEdge, ...]] = []
    seen: set[DirectedEdge] = set()
    for u in graph.sorted_vertices():
        if not rotation[u]:
            faces.append(())
            continue
        for w in rotation[u]:
            if (u, w) in seen:
                continue
            face = []
            edge = (u, w)
            while edge not in seen:
                seen.add(edge)
                face.append(edge)
                a, b = edge
                rot = rotation[b]
                nxt = rot[(index[b][a] - 1) % len(rot)]  # ccw successor of a at b
                edge = (b, nxt)
            faces.append(tuple(face))
    return tuple(faces)


def embedding_from_rotation(
    graph: SimpleGraph, rotation: Mapping[str, Iterable[str]]
) -> CombinatorialEmbedding:
    rot = {v: tuple(ws) for v, ws in rotation.items()}
    for v in graph.vertices:
        if set(rot.get(v, ())) != set(graph.neighbors(v)) or len(rot[v]) != graph.degree(v):
            raise ValueError(f"rotation at {v!r} is not a permutation of its neighbors")
    return CombinatorialEmbedding(graph, rot, _faces_from_rotation(graph, rot))


# Left-right planarity test ---------------------------------------------------


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self):
        return self.low is None and self.high is None

    def copy(self):
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self):
        self.left, self.right = self.right, self.left


class _LRPlanarity:
    """State machine for the left-right test; all DFS passes iterative."""

    def __init__(self, graph: SimpleGraph):
        self.adj = {v: sorted(graph.neighbors(v)) for v in graph.sorted_vertices()}
        self.order = graph.sorted_vertices()
        self.height: dict[str, int | None] = {v: None for v in self.order}
        self.parent_edge: dict[str, DirectedEdge | None] = {v: None for v in self.order}
        self.roots: list[str] = []
        self.oriented: set[DirectedEdge] = set()
        self.out: dict[str, list[str]] = {v: [] for v in self.order}  # oriented adjacency
        self.lowpt: dict[DirectedEdge, int] = {}
        self.lowpt2: dict[DirectedEdge, int] = {}
        self.nesting_depth: dict[DirectedEdge, int] = {}
        self.ref: dict[DirectedEdge, DirectedEdge | None] = {}
        self.side: dict[DirectedEdge, int] = {}
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[DirectedEdge, _ConflictPair | None] = {}
        self.lowpt_edge: dict[DirectedEdge, DirectedEdge] = {}
        self.ordered: dict[str, list[str]] = {}

    def run(self) -> dict[str, list[str]] | None:
        """Return a clockwise rotation system, or None if non-planar."""
        n = len(self.order)
        m = sum(len(a) for a in self.adj.values()) // 2
        if n > 2 and m > 3 * n - 6:
            return None

        for v in self.order:
            if self.height[v] is None:
                self.height[v] = 0
                self.roots.append(v)
                self._dfs_orientation(v)

        for v in self.order:
            self.ordered[v] = sorted(self.out[v], key=lambda w, v=v: self.nesting_depth[(v, w)])
        for v in self.roots:
            if not self._dfs_testing(v):
                return None

        for v in self.order:
            for w in self.out[v]:
                e = (v, w)
                self.nesting_depth[e] = self._sign(e) * self.nesting_depth[e]

        rotation: dict[str, list[str]] = {}
        for v in self.order:
            self.ordered[v] = sorted(self.out[v], key=lambda w, v=v: self.nesting_depth[(v, w)])
            rotation[v] = list(self.ordered[v])

        self.left_ref: dict[str, str] = {}
        self.right_ref: dict[str, str] = {}
        for v in self.roots:
            self._dfs_embedding(v, rotation)
        return rotation

    # Phase 1: orientation ---------------------------------------------------

    def _dfs_orientation(self, root: str) -> None:
        ind = {v: 0 for v in self.order}
        skip_init: set[DirectedEdge] = set()
        stack = [root]
        while stack:
            v = stack.pop()
            e = self.parent_edge[v]
            descend = False
            while ind[v] < len(self.adj[v]):
                w = self.adj[v][ind[v]]
                vw = (v, w)
                if vw not in skip_init:
                    if vw in self.oriented or (w, v) in self.oriented:
                        ind[v] += 1
                        continue
                    self.oriented.add(vw)
                    self.out[v].append(w)
                    self.lowpt[vw] = self.height[v]
                    self.lowpt2[vw] = self.height[v]
                    if self.height[w] is None:  # tree edge
                        self.parent_edge[w] = vw
                        self.height[w] = self.height[v] + 1
                        stack.append(v)
                        stack.append(w)
                        skip_init.add(vw)
                        descend = True
                        break
                    else:  # back edge
                        self.lowpt[vw] = self.height[w]

                self.nesting_depth[vw] = 2 * self.lowpt[vw]
                if self.lowpt2[vw] < self.height[v]:  # chordal
                    self.nesting_depth[vw] += 1

                if e is not None:
                    if self.lowpt[vw] < self.lowpt[e]:
                        self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                        self.lowpt[e] = self.lowpt[vw]
                    elif self.lowpt[vw] > self.lowpt[e]:
                        self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                    else:
                        self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])
                ind[v] += 1
            if descend:
                continue

    # Phase 2: testing ---------------------------------------------------------

    def _conflicting(self, interval: _Interval, b: DirectedEdge) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, pair: _ConflictPair) -> int:
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def _dfs_testing(self, root: str) -> bool:
        ind = {v: 0 for v in self.order}
        skip_init: set[DirectedEdge] = set()
        stack = [root]
        while stack:
            v = stack.pop()
            e = self.parent_edge[v]
            skip_final = False
            while ind[v] < len(self.ordered[v]):
                w = self.ordered[v][ind[v]]
                ei = (v, w)
                if ei not in skip_init:
                    self.stack_bottom[ei] = self.S[-1] if self.S else None
                    if ei == self.parent_edge[w]:  # tree edge
                        stack.append(v)
                        stack.append(w)
                        skip_init.add(ei)
                        skip_final = True
                        break
                    self.lowpt_edge[ei] = ei
                    self.S.append(_ConflictPair(right=_Interval(ei, ei)))

                if self.lowpt[ei] < self.height[v]:  # ei has a return edge
                    if w == self.ordered[v][0]:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                ind[v] += 1
            if not skip_final and e is not None:
                self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: DirectedEdge, e: DirectedEdge) -> bool:
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if self.lowpt[Q.right.low] > self.lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:  # align
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if (self.S[-1] if self.S else None) is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while self._conflicting(self.S[-1].left, ei) or self._conflicting(self.S[-1].right, ei):
            Q = self.S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _remove_back_edges(self, e: DirectedEdge) -> None:
        u = e[0]
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            P = self.S.pop()
            if P.left.low is not None:
                self.side[P.left.low] = -1
        if self.S:
            P = self.S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = self.ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                self.ref[P.left.low] = P.right.low
                self.side[P.left.low] = -1
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = self.ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                self.ref[P.right.low] = P.left.low
                self.side[P.right.low] = -1
                P.right.low = None
            self.S.append(P)
        if self.lowpt[e] < self.height[u]:  # e has a return edge
            hl = self.S[-1].left.high
            hr = self.S[-1].right.high
            if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr

    # Phase 3: embedding -------------------------------------------------------

    def _sign(self, e: DirectedEdge) -> int:
        stack = [e]
        old_ref: dict[DirectedEdge, DirectedEdge] = {}
        while stack:
            cur = stack.pop()
            r = self.ref.get(cur)
            if r is not None:
                stack.append(cur)
                stack.append(r)
                old_ref[cur] = r
                self.ref[cur] = None
            elif cur in old_ref:
                self.side[cur] = self.side.get(cur, 1) * self.side.get(old_ref[cur], 1)
        return self.side.get(e, 1)

    def _dfs_embedding(self, root: str, rotation: dict[str, list[str]]) -> None:
        ind = {v: 0 for v in self.order}
        stack = [root]
        while stack:
            v = stack.pop()
            descend = False
            while ind[v] < len(self.ordered[v]):
                w = self.ordered[v][ind[v]]
                ind[v] += 1
                ei = (v, w)
                if ei == self.parent_edge[w]:  # tree edge
                    rotation[w].insert(0, v)
                    self.left_ref[v] = w
                    self.right_ref[v] = w
                    stack.append(v)
                    stack.append(w)
                    descend = True
                    break
                # back edge: insert v into the ancestor w's rotation
                if self.side.get(ei, 1) == 1:
                    pos = rotation[w].index(self.right_ref[w])
                    rotation[w].insert(pos + 1, v)
                else:
                    pos = rotation[w].index(self.left_ref[w])
                    rotation[w].insert(pos, v)
                    self.left_ref[w] = v
            if descend:
                continue


def is_planar(graph: SimpleGraph) -> bool:
    """Left-right planarity test (linear-time criterion)."""
    return _LRPlanarity(graph).run() is not None


def planar_embedding(graph: SimpleGraph) -> CombinatorialEmbedding:
    """Rotation system + faces of a planar graph; raises NotPlanar otherwise."""
    rotation = _LRPlanarity(graph).run()
    if rotation is None:
        raise NotPlanar(f"graph with {graph.n} vertices / {graph.m} edges is not planar")
    rot = {v: tuple(ws) for v, ws in rotation.items()}
    return CombinatorialEmbedding(graph, rot, _faces_from_rotation(graph, rot))


# Brute-force oracle -----------------------------------------------------------

_SEARCH_BUDGET = 4_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise TooLarge("subdivision search exceeded its step budget")


def _route_pairs(
    adj: Mapping[str, frozenset[str]],
    pairs: list[tuple[str, str]],
    used: set[str],
    budget: _Budget,
) -> bool:
    """Backtracking search for internally disjoint paths joining all pairs."""
    if not pairs:
        return True
    u, v = pairs[0]

    def extend(cur: str) -> bool:
        budget.spend()
        neigh = sorted(adj[cur])
        if v in adj[cur]:  # try closing the path first
            if _route_pairs(adj, pairs[1:], used, budget):
                return True
        for w in neigh:
            if w == v or w in used:
                continue
            used.add(w)
            ok = extend(w)
            used.discard(w)
            if ok:
                return True
        return False

    return extend(u)


def _has_subdivision_k5(graph: SimpleGraph, budget: _Budget) -> bool:
    cand = [v for v in graph.sorted_vertices() if graph.degree(v) >= 4]
    adj = {v: graph.neighbors(v) for v in graph.vertices}
    for branch in combinations(cand, 5):
        pairs = [(a, b) for a, b in combinations(branch, 2)]
        pairs.sort(key=lambda p: graph.has_edge(*p))  # scarce pairs first
        if _route_pairs(adj, pairs, set(branch), budget):
            return True
    return False


def _has_subdivision_k33(graph: SimpleGraph, budget: _Budget) -> bool:
    cand = [v for v in graph.sorted_vertices() if graph.degree(v) >= 3]
    adj = {v: graph.neighbors(v) for v in graph.vertices}
    for six in combinations(cand, 6):
        rest = six[1:]
        for pair in combinations(rest, 2):  # side of six[0], avoiding mirror splits
            side_a = (six[0],) + pair
            side_b = tuple(x for x in rest if x not in pair)
            pairs = [(a, b) for a in side_a for b in side_b]
            pairs.sort(key=lambda p: graph.has_edge(*p))
            if _route_pairs(adj, pairs, set(six), budget):
                return True
    return False


def is_planar_bruteforce(graph: SimpleGraph) -> bool:
    """Planarity by exhaustive Kuratowski-subdivision search.

    Independent of the left-right test: a graph is planar iff it contains
    neither a K5 nor a K3,3 subdivision. Counting prefilters keep the
    search tiny on the small inputs this oracle is meant for; a step
    budget raises TooLarge instead of running away on dense inputs.
    """
    # a K3,3 subdivision needs >= 9 edges, a K5 subdivision >= 10
    if graph.m <= 8:
        return True
    deg4 = sum(1 for v in graph.vertices if graph.degree(v) >= 4)
    deg3 = sum(1 for v in graph.vertices if graph.degree(v) >= 3)
    k5_work = _ncr(deg4, 5)
    k33_work = _ncr(deg3, 6) * 10
    if k5_work + k33_work > 200_000:
        raise TooLarge(
            f"too many branch-vertex candidates ({k5_work + k33_work}) for exhaustive search"
        )
    budget = _Budget(_SEARCH_BUDGET)
    if deg4 >= 5 and _has_subdivision_k5(graph, budget):
        return False
    if deg3 >= 6 and _has_subdivision_k33(graph, budget):
        return False
    return True


def _ncr(n: int, k: int) -> int:
    if n < k:
        return 0
    from math import comb

    return comb(n, k)
