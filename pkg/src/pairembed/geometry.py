"""Exact rational plane geometry.

Every predicate here is decided with `fractions.Fraction` arithmetic, so
there is no epsilon tuning anywhere: a crossing is a crossing, a tangency
is a tangency. Points are pairs of Fractions; polygons are lists of
points whose closing edge is implicit.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

Point = tuple[Fraction, Fraction]
Segment = tuple[Point, Point]


def pt(x, y) -> Point:
    """Coerce a coordinate pair to an exact point."""
    return (Fraction(x), Fraction(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Point, f) -> Point:
    return (a[0] * f, a[1] * f)


def cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Point, b: Point) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle (a, b, c): +1 ccw, -1 cw, 0 flat."""
    v = cross(sub(b, a), sub(c, a))
    return (v > 0) - (v < 0)


def collinear(a: Point, b: Point, c: Point) -> bool:
    return orientation(a, b, c) == 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment [a, b]."""
    if orientation(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


# Segment relations ----------------------------------------------------------

DISJOINT = "disjoint"
PROPER = "proper"
TOUCH = "touch"


def segment_relation(a: Point, b: Point, c: Point, d: Point) -> str:
    """Classify the intersection of segments [a,b] and [c,d].

    "proper"   -- exactly one common point, interior to both segments
    "touch"    -- any other non-empty intersection (shared endpoint,
                  endpoint on interior, collinear overlap)
    "disjoint" -- no common point
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)

    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return PROPER

    touch = (
        (o1 == 0 and on_segment(c, a, b))
        or (o2 == 0 and on_segment(d, a, b))
        or (o3 == 0 and on_segment(a, c, d))
        or (o4 == 0 and on_segment(b, c, d))
    )
    return TOUCH if touch else DISJOINT


def line_intersection(a: Point, d1: Point, b: Point, d2: Point) -> Point:
    """Intersection of line a + t*d1 with line b + s*d2 (directions not parallel)."""
    denom = cross(d1, d2)
    if denom == 0:
        raise ZeroDivisionError("parallel lines")
    t = cross(sub(b, a), d2) / denom
    return add(a, scale(d1, t))


def segment_crossing_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Crossing point of two properly crossing segments."""
    return line_intersection(a, sub(b, a), c, sub(d, c))


# Distances (squared, exact) -------------------------------------------------


def dist2(a: Point, b: Point) -> Fraction:
    dx, dy = sub(a, b)
    return dx * dx + dy * dy


def point_segment_dist2(p: Point, a: Point, b: Point) -> Fraction:
    ab = sub(b, a)
    denom = dot(ab, ab)
    if denom == 0:
        return dist2(p, a)
    t = dot(sub(p, a), ab) / denom
    t = max(Fraction(0), min(Fraction(1), t))
    return dist2(p, add(a, scale(ab, t)))


def segment_segment_dist2(a: Point, b: Point, c: Point, d: Point) -> Fraction:
    if segment_relation(a, b, c, d) != DISJOINT:
        return Fraction(0)
    return min(
        point_segment_dist2(a, c, d),
        point_segment_dist2(b, c, d),
        point_segment_dist2(c, a, b),
        point_segment_dist2(d, a, b),
    )


def rational_sqrt_lower(x: Fraction) -> Fraction:
    """A positive rational r with r*r <= x, for x > 0."""
    if x <= 0:
        raise ValueError("need a positive value")
    n, d = x.numerator, x.denominator
    r = Fraction(isqrt(n * d), d)
    if r == 0:
        # x < 1/d**2; fall back to an explicit small bound
        r = Fraction(1, 2 * d)
        while r * r > x:
            r /= 2
    return r


# Polygons -------------------------------------------------------------------


def polygon_edges(poly: Sequence[Point]) -> list[Segment]:
    n = len(poly)
    return [(poly[i], poly[(i + 1) % n]) for i in range(n)]


def polygon_area2(poly: Sequence[Point]) -> Fraction:
    """Doubled signed area (positive for ccw orientation)."""
    total = Fraction(0)
    n = len(poly)
    for i in range(n):
        total += cross(poly[i], poly[(i + 1) % n])
    return total


def polygon_is_simple(poly: Sequence[Point]) -> bool:
    """Check that a closed vertex list bounds a simple polygon.

    Consecutive collinear vertices are fine, zero-length edges and
    backtracking spikes are not; non-adjacent edges must be disjoint.
    """
    n = len(poly)
    if n < 3:
        return False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        c = poly[(i + 2) % n]
        if a == b:
            return False
        # reject reversal at b (spike); straight continuation is allowed
        if orientation(a, b, c) == 0 and dot(sub(b, a), sub(c, b)) <= 0:
            return False
    edges = polygon_edges(poly)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges already checked via spike rule
            if segment_relation(*edges[i], *edges[j]) != DISJOINT:
                return False
    return polygon_area2(poly) != 0


def point_in_polygon(p: Point, poly: Sequence[Point]) -> int:
    """Locate p relative to a simple polygon: 1 inside, 0 on boundary, -1 outside."""
    for a, b in polygon_edges(poly):
        if on_segment(p, a, b):
            return 0
    inside = False
    px, py = p
    for a, b in polygon_edges(poly):
        (ax, ay), (bx, by) = a, b
        if (ay > py) != (by > py):
            xi = ax + (py - ay) * (bx - ax) / (by - ay)
            if xi > px:
                inside = not inside
    return 1 if inside else -1


def polygon_pair_contacts(p: Sequence[Point], q: Sequence[Point]) -> tuple[int, bool]:
    """Count proper boundary crossings between two simple polygons.

    Returns (proper_crossing_count, tangency_flag). The tangency flag is
    set on any non-transversal contact: shared vertices, a vertex on the
    other boundary, or collinear overlapping edges.
    """
    crossings = 0
    tangent = False
    q_edges = polygon_edges(q)
    for a, b in polygon_edges(p):
        for c, d in q_edges:
            rel = segment_relation(a, b, c, d)
            if rel == PROPER:
                crossings += 1
            elif rel == TOUCH:
                tangent = True
    return crossings, tangent


def polygon_contains_polygon(outer: Sequence[Point], inner: Sequence[Point]) -> bool:
    """True iff inner lies strictly inside outer.

    Only meaningful when the two boundaries have no contact at all
    (callers check contacts first).
    """
    return all(point_in_polygon(v, outer) == 1 for v in inner)


def no_three_collinear(points: Sequence[Point]) -> bool:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if collinear(points[i], points[j], points[k]):
                    return False
    return True


def bounding_box(points: Iterable[Point]) -> tuple[Point, Point]:
    pts = list(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (min(xs), min(ys)), (max(xs), max(ys))
