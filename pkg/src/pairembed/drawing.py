"""Straight-line grid drawings of planar graphs.

Pipeline: make the embedded graph connected and biconnected with dummy
edges, triangulate every face, compute a canonical ordering, then run
the Chrobak-Payne shift method. All coordinates are integers, so the
non-crossing property can be verified with exact arithmetic. Dummy edges
are dropped from the result.

Disconnected graphs are drawn per component and stacked into disjoint
horizontal strips by `draw_planar_graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import geometry as geom
from .graphs import SimpleGraph
from .planarity import CombinatorialEmbedding, planar_embedding

GridPoint = tuple[int, int]


@dataclass(frozen=True)
class PlanarDrawing:
    """Integer-grid positions realizing a combinatorial embedding."""

    positions: Mapping[str, GridPoint]
    embedding: CombinatorialEmbedding


class _MutableEmbedding:
    """Half-edge rotation structure used while adding dummy edges.

    Neighbor lists are in clockwise order; inserts address a reference
    neighbor, mirroring the operations of the final embedding phase.
    """

    def __init__(self, rotation: Mapping[str, Sequence[str]]):
        self.rot: dict[str, list[str]] = {v: list(ws) for v, ws in rotation.items()}

    def nodes(self):
        return self.rot.keys()

    def has_edge(self, v: str, w: str) -> bool:
        return w in self.rot[v]

    def cw(self, v: str, w: str) -> str:
        rot = self.rot[v]
        return rot[(rot.index(w) + 1) % len(rot)]

    def ccw(self, v: str, w: str) -> str:
        rot = self.rot[v]
        return rot[(rot.index(w) - 1) % len(rot)]

    def add_half_edge_cw_after(self, v: str, w: str, ref: str | None) -> None:
        """Insert w so that ref is its counterclockwise neighbor."""
        if ref is None:
            self.rot[v].append(w)
        else:
            self.rot[v].insert(self.rot[v].index(ref) + 1, w)

    def add_half_edge_ccw_before(self, v: str, w: str, ref: str | None) -> None:
        """Insert w so that ref is its clockwise neighbor."""
        if ref is None:
            self.rot[v].insert(0, w)
        else:
            self.rot[v].insert(self.rot[v].index(ref), w)

    def connect_components(self, v: str, w: str) -> None:
        self.add_half_edge_ccw_before(v, w, self.rot[v][0] if self.rot[v] else None)
        self.add_half_edge_ccw_before(w, v, self.rot[w][0] if self.rot[w] else None)

    def next_face_half_edge(self, v: str, w: str) -> tuple[str, str]:
        return w, self.ccw(w, v)


def _make_bi_connected(emb: _MutableEmbedding, start: str, out: str, counted: set) -> list[str]:
    """Walk one face, adding chords wherever a vertex repeats on it."""
    if (start, out) in counted:
        return []
    counted.add((start, out))
    v1, v2 = start, out
    face_list = [start]
    face_set = {start}
    _, v3 = emb.next_face_half_edge(v1, v2)
    while v2 != start or v3 != out:
        if v1 == v2:
            raise RuntimeError("invalid half-edge walk (bridge endpoint)")
        if v2 in face_set:
            emb.add_half_edge_cw_after(v1, v3, v2)
            emb.add_half_edge_ccw_before(v3, v1, v2)
            counted.add((v2, v3))
            counted.add((v3, v1))
            v2 = v1
        else:
            face_set.add(v2)
            face_list.append(v2)
        v1 = v2
        v2, v3 = emb.next_face_half_edge(v2, v3)
        counted.add((v1, v2))
    return face_list


def _triangulate_face(emb: _MutableEmbedding, v1: str, v2: str) -> None:
    _, v3 = emb.next_face_half_edge(v1, v2)
    _, v4 = emb.next_face_half_edge(v2, v3)
    if v1 in (v2, v3):
        return
    while v1 != v4:
        if emb.has_edge(v1, v3):
            v1, v2, v3 = v2, v3, v4
        else:
            emb.add_half_edge_cw_after(v1, v3, v2)
            emb.add_half_edge_ccw_before(v3, v1, v2)
            v1, v2, v3 = v1, v3, v4
        _, v4 = emb.next_face_half_edge(v2, v3)


def _triangulate_embedding(embedding: CombinatorialEmbedding) -> tuple[_MutableEmbedding, list[str]]:
    """Fully triangulate a copy of the embedding; returns it + an outer triangle."""
    emb = _MutableEmbedding(embedding.rotation)
    components = embedding.graph.components()
    anchors = [min(c) for c in components]
    for a, b in zip(anchors, anchors[1:]):
        emb.connect_components(a, b)

    outer_face: list[str] = []
    face_list = []
    counted: set = set()
    for v in sorted(emb.nodes()):
        for w in list(emb.rot[v]):
            face = _make_bi_connected(emb, v, w, counted)
            if face:
                face_list.append(face)
                if len(face) > len(outer_face):
                    outer_face = face
    for face in face_list:
        _triangulate_face(emb, face[0], face[1])
    v1, v2 = outer_face[0], outer_face[1]
    v3 = emb.ccw(v2, v1)
    return emb, [v1, v2, v3]


def _canonical_ordering(emb: _MutableEmbedding, outer_face: list[str]) -> list[tuple[str, list[str]]]:
    """Canonical ordering of a fully triangulated embedding."""
    v1, v2 = outer_face[0], outer_face[1]
    chords: dict[str, int] = {}
    marked: set[str] = set()
    ready = set(outer_face)

    outer_ccw: dict[str, str] = {}
    prev = v2
    for idx in range(2, len(outer_face)):
        outer_ccw[prev] = outer_face[idx]
        prev = outer_face[idx]
    outer_ccw[prev] = v1
    outer_cw: dict[str, str] = {}
    prev = v1
    for idx in range(len(outer_face) - 1, 0, -1):
        outer_cw[prev] = outer_face[idx]
        prev = outer_face[idx]

    def is_outer_nbr(x, y):
        if x not in outer_ccw:
            return outer_cw[x] == y
        if x not in outer_cw:
            return outer_ccw[x] == y
        return outer_ccw[x] == y or outer_cw[x] == y

    def on_outer(x):
        return x not in marked and (x in outer_ccw or x == v1)

    for v in outer_face:
        for nbr in emb.rot[v]:
            if on_outer(nbr) and not is_outer_nbr(v, nbr):
                chords[v] = chords.get(v, 0) + 1
                ready.discard(v)

    n = len(emb.rot)
    ordering: list = [None] * n
    ordering[0] = (v1, [])
    ordering[1] = (v2, [])
    ready.discard(v1)
    ready.discard(v2)

    for k in range(n - 1, 1, -1):
        v = min(ready)  # deterministic pick
        ready.discard(v)
        marked.add(v)
        wp = wq = None
        for nbr in emb.rot[v]:
            if nbr in marked:
                continue
            if on_outer(nbr):
                if nbr == v1:
                    wp = v1
                elif nbr == v2:
                    wq = v2
                elif outer_cw[nbr] == v:
                    wp = nbr
                else:
                    wq = nbr
            if wp is not None and wq is not None:
                break
        wp_wq = [wp]
        nbr = wp
        while nbr != wq:
            next_nbr = emb.ccw(v, nbr)
            wp_wq.append(next_nbr)
            outer_cw[nbr] = next_nbr
            outer_ccw[next_nbr] = nbr
            nbr = next_nbr
        if len(wp_wq) == 2:
            for x in (wp, wq):
                chords[x] = chords.get(x, 0) - 1
                if chords[x] == 0:
                    ready.add(x)
        else:
            new_face = set(wp_wq[1:-1])
            for w in new_face:
                ready.add(w)
                for nbr in emb.rot[w]:
                    if on_outer(nbr) and not is_outer_nbr(w, nbr):
                        chords[w] = chords.get(w, 0) + 1
                        ready.discard(w)
                        if nbr not in new_face:
                            chords[nbr] = chords.get(nbr, 0) + 1
                            ready.discard(nbr)
        ordering[k] = (v, wp_wq)
    return ordering


def _shift_positions(node_list: list[tuple[str, list[str]]]) -> dict[str, GridPoint]:
    """Chrobak-Payne shift method over a canonical ordering."""
    left_child: dict[str, str | None] = {}
    right_child: dict[str, str | None] = {}
    delta_x: dict[str, int] = {}
    y_coord: dict[str, int] = {}

    v1, v2, v3 = node_list[0][0], node_list[1][0], node_list[2][0]
    delta_x[v1], y_coord[v1] = 0, 0
    right_child[v1], left_child[v1] = v3, None
    delta_x[v2], y_coord[v2] = 1, 0
    right_child[v2], left_child[v2] = None, None
    delta_x[v3], y_coord[v3] = 1, 1
    right_child[v3], left_child[v3] = v2, None

    for k in range(3, len(node_list)):
        vk, contour = node_list[k]
        wp, wp1, wq1, wq = contour[0], contour[1], contour[-2], contour[-1]
        multi = len(contour) > 2
        delta_x[wp1] += 1
        delta_x[wq] += 1
        dx_sum = sum(delta_x[x] for x in contour[1:])
        delta_x[vk] = (-y_coord[wp] + dx_sum + y_coord[wq]) // 2
        y_coord[vk] = (y_coord[wp] + dx_sum + y_coord[wq]) // 2
        delta_x[wq] = dx_sum - delta_x[vk]
        if multi:
            delta_x[wp1] -= delta_x[vk]
        right_child[wp] = vk
        right_child[vk] = wq
        if multi:
            left_child[vk] = wp1
            right_child[wq1] = None
        else:
            left_child[vk] = None

    pos: dict[str, GridPoint] = {v1: (0, y_coord[v1])}
    remaining = [v1]
    while remaining:
        parent = remaining.pop()
        for tree in (left_child, right_child):
            child = tree[parent]
            if child is not None:
                pos[child] = (pos[parent][0] + delta_x[child], y_coord[child])
                remaining.append(child)
    return pos


def straight_line_drawing(embedding: CombinatorialEmbedding) -> PlanarDrawing:
    """Non-crossing integer-grid drawing of a connected embedded graph.

    The drawing realizes the given rotation system up to reflection and
    fits an integer grid of size at most 2|V| x 2|V|.
    """
    graph = embedding.graph
    if len(graph.components()) > 1:
        raise ValueError("straight_line_drawing needs a connected graph")
    vs = graph.sorted_vertices()
    if len(vs) <= 3:
        defaults = [(0, 0), (2, 0), (1, 1)]
        return PlanarDrawing({v: defaults[i] for i, v in enumerate(vs)}, embedding)
    emb, outer = _triangulate_embedding(embedding)
    ordering = _canonical_ordering(emb, outer)
    pos = _shift_positions(ordering)
    return PlanarDrawing(pos, embedding)


def draw_planar_graph(graph: SimpleGraph) -> PlanarDrawing:
    """Embed and draw a (possibly disconnected) planar graph.

    Components are drawn separately and translated into disjoint
    horizontal strips.
    """
    embedding = planar_embedding(graph)
    comps = graph.components()
    if len(comps) == 1 or not comps:
        return straight_line_drawing(embedding) if comps else PlanarDrawing({}, embedding)
    positions: dict[str, GridPoint] = {}
    y_base = 0
    for comp in sorted(comps, key=min):
        sub = graph.subgraph(comp)
        sub_drawing = straight_line_drawing(planar_embedding(sub))
        ys = [p[1] for p in sub_drawing.positions.values()]
        xs = [p[0] for p in sub_drawing.positions.values()]
        y0, x0 = min(ys), min(xs)
        for v, (x, y) in sub_drawing.positions.items():
            positions[v] = (x - x0, y - y0 + y_base)
        y_base += max(ys) - y0 + 2
    return PlanarDrawing(positions, embedding)


def drawing_violations(positions: Mapping[str, GridPoint], graph: SimpleGraph) -> list[str]:
    """Exact O(e^2) straight-line drawing check.

    Reports duplicate positions, vertices lying on non-incident edges,
    and any contact between segments beyond a shared endpoint.
    """
    problems = []
    pts = {v: geom.pt(*positions[v]) for v in graph.vertices}
    by_pos: dict = {}
    for v, p in pts.items():
        if p in by_pos:
            problems.append(f"vertices {by_pos[p]} and {v} share a position")
        by_pos[p] = v
    edges = graph.sorted_edges()
    for u, v in edges:
        for w in graph.vertices:
            if w in (u, v):
                continue
            if geom.on_segment(pts[w], pts[u], pts[v]):
                problems.append(f"vertex {w} lies on edge ({u},{v})")
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            shared = {a, b} & {c, d}
            rel = geom.segment_relation(pts[a], pts[b], pts[c], pts[d])
            if shared:
                # sharing one endpoint: only that point may be common
                if rel == geom.PROPER:
                    problems.append(f"edges ({a},{b}) and ({c},{d}) cross")
                elif rel == geom.TOUCH:
                    (s,) = shared
                    others = [x for x in (a, b, c, d) if x != s]
                    for x in others:
                        seg = (c, d) if x in (a, b) else (a, b)
                        if geom.on_segment(pts[x], pts[seg[0]], pts[seg[1]]) and x != s:
                            problems.append(
                                f"edges ({a},{b}) and ({c},{d}) overlap beyond {s}"
                            )
                            break
            elif rel != geom.DISJOINT:
                problems.append(f"edges ({a},{b}) and ({c},{d}) intersect")
    return problems
