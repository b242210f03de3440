"""Exact rational planar primitives.

All coordinates are :class:`fractions.Fraction`; no predicate ever rounds.
Polygons are kept in a normal form: counter-clockwise, no repeated
consecutive vertices, no collinear consecutive edges.  A vertex may repeat
non-consecutively (a "pinch"), which is how two convex pieces meeting in a
single point are represented as one ring.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InvalidInput
from .intervals import Interval, IntervalSet


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, o):
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return Point(self.x - o.x, self.y - o.y)

    def scale(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def __repr__(self):
        return "P(%s, %s)" % (self.x, self.y)


RationalPoint = Point


def pt(x, y) -> Point:
    return Point(Fraction(x), Fraction(y))


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, 0 collinear, -1 right turn."""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def lerp(a: Point, b: Point, t) -> Point:
    return Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def linf(a: Point, b: Point) -> Fraction:
    return max(abs(a.x - b.x), abs(a.y - b.y))


# ---------------------------------------------------------------- segments

CLOSURES = ("closed", "open", "half_open_a", "half_open_b")


@dataclass(frozen=True)
class Segment:
    """Segment from ``a`` to ``b``.  ``half_open_a`` excludes ``a``,
    ``half_open_b`` excludes ``b``."""

    a: Point
    b: Point
    closure: str = "closed"

    def __post_init__(self):
        if self.closure not in CLOSURES:
            raise InvalidInput("unknown closure %r" % self.closure)
        if self.a == self.b and self.closure != "closed":
            raise InvalidInput("degenerate segment must be closed")

    @property
    def a_closed(self) -> bool:
        return self.closure in ("closed", "half_open_b")

    @property
    def b_closed(self) -> bool:
        return self.closure in ("closed", "half_open_a")

    def param_set(self) -> IntervalSet:
        return IntervalSet([Interval(Fraction(0), Fraction(1), self.a_closed, self.b_closed)])

    def line(self) -> "Line":
        return Line(self.a, self.b - self.a)

    def contains(self, p: Point) -> bool:
        if self.a == self.b:
            return p == self.a
        if orientation(self.a, self.b, p) != 0:
            return False
        return self.line().param(p) in self.param_set()


def on_closed_segment(p: Point, a: Point, b: Point) -> bool:
    if orientation(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


@dataclass(frozen=True)
class Line:
    """The line ``origin + t * direction``."""

    origin: Point
    direction: Point

    def at(self, t) -> Point:
        return Point(self.origin.x + self.direction.x * t, self.origin.y + self.direction.y * t)

    def param(self, p: Point) -> Fraction:
        d = self.direction
        return dot(p - self.origin, d) / dot(d, d)

    def contains(self, p: Point) -> bool:
        return cross(self.direction, p - self.origin) == 0

    def side(self, p: Point) -> int:
        return sign(cross(self.direction, p - self.origin))

    def same_line(self, other: "Line") -> bool:
        return cross(self.direction, other.direction) == 0 and self.contains(other.origin)


def line_through(a: Point, b: Point) -> Line:
    return Line(a, b - a)


def segment_line_param(line: Line, a: Point, b: Point):
    """Intersection of ``line`` with closed segment [a, b].

    Returns ``None`` (no meet), ``("point", t)`` or ``("overlap", ta, tb)``.
    """
    d = line.direction
    e = b - a
    denom = cross(d, e)
    ao = a - line.origin
    if denom == 0:
        if cross(d, ao) != 0:
            return None
        return ("overlap", line.param(a), line.param(b))
    s = cross(ao, d) / denom
    if s < 0 or s > 1:
        return None
    return ("point", cross(ao, e) / denom)


def segment_set_on_line(seg: Segment, line: Line) -> IntervalSet:
    """Parameters of ``line`` covered by ``seg`` (closure-aware)."""
    if seg.a == seg.b:
        return IntervalSet.point(line.param(seg.a)) if line.contains(seg.a) else IntervalSet()
    hit = segment_line_param(line, seg.a, seg.b)
    if hit is None:
        return IntervalSet()
    if hit[0] == "point":
        t = hit[1]
        p = line.at(t)
        if p == seg.a and not seg.a_closed or p == seg.b and not seg.b_closed:
            return IntervalSet()
        return IntervalSet.point(t)
    ta, tb = hit[1], hit[2]
    if ta <= tb:
        return IntervalSet([Interval(ta, tb, seg.a_closed, seg.b_closed)])
    return IntervalSet([Interval(tb, ta, seg.b_closed, seg.a_closed)])


def segment_intersection(s: Segment, t: Segment):
    """Exact intersection: ``None``, a :class:`Point`, or a :class:`Segment`."""
    if s.a == s.b:
        return s.a if t.contains(s.a) else None
    line = s.line()
    common = s.param_set() & segment_set_on_line(t, line)
    if not common:
        return None
    iv = common.intervals[0]
    if iv.is_point:
        return line.at(iv.lo)
    closure = {(True, True): "closed", (False, False): "open",
               (False, True): "half_open_a", (True, False): "half_open_b"}
    return Segment(line.at(iv.lo), line.at(iv.hi), closure[(iv.lo_closed, iv.hi_closed)])


# ---------------------------------------------------------------- half-planes

@dataclass(frozen=True)
class HalfPlane:
    """``a x + b y <= c`` (closed) or ``< c`` (open)."""

    a: Fraction
    b: Fraction
    c: Fraction
    closed: bool = True

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise InvalidInput("degenerate half-plane")

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point) -> bool:
        v = self.value(p)
        return v <= 0 if self.closed else v < 0

    def complement(self) -> "HalfPlane":
        return HalfPlane(-self.a, -self.b, -self.c, not self.closed)

    def closure(self) -> "HalfPlane":
        return HalfPlane(self.a, self.b, self.c, True)

    def boundary(self) -> Line:
        # direction keeps the half-plane on its left
        d = Point(-self.b, self.a)
        if self.a != 0:
            o = Point(self.c / self.a, Fraction(0))
        else:
            o = Point(Fraction(0), self.c / self.b)
        return Line(o, Point(-d.x, -d.y))

    @classmethod
    def left_of(cls, p: Point, q: Point, closed: bool = True) -> "HalfPlane":
        """Points on the left of the directed line p -> q."""
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y, closed)

    @classmethod
    def containing(cls, p: Point, q: Point, ref: Point, closed: bool = True) -> "HalfPlane":
        """Side of line pq containing ``ref`` (which must be off the line)."""
        h = cls.left_of(p, q, closed)
        if h.value(ref) > 0:
            h = cls.left_of(q, p, closed)
        return h


# ---------------------------------------------------------------- polygons

def _normal_ring(vertices: Sequence[Point]) -> list:
    ring = []
    for v in vertices:
        if not ring or ring[-1] != v:
            ring.append(v)
    while len(ring) > 1 and ring[0] == ring[-1]:
        ring.pop()
    changed = True
    while changed and len(ring) >= 3:
        changed = False
        for i in range(len(ring)):
            p, v, n = ring[i - 1], ring[i], ring[(i + 1) % len(ring)]
            if orientation(p, v, n) == 0 or p == n:
                del ring[i]
                changed = True
                break
        if changed:
            out = []
            for v in ring:
                if not out or out[-1] != v:
                    out.append(v)
            while len(out) > 1 and out[0] == out[-1]:
                out.pop()
            ring = out
    return ring


def signed_area2(vertices: Sequence[Point]) -> Fraction:
    s = Fraction(0)
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        s += a.x * b.y - a.y * b.x
    return s


@dataclass(frozen=True)
class Polygon:
    vertices: tuple

    def __init__(self, vertices: Iterable[Point]):
        ring = _normal_ring([Point(Fraction(v[0]), Fraction(v[1])) for v in vertices])
        if len(ring) < 3:
            raise InvalidInput("polygon has zero area")
        if signed_area2(ring) < 0:
            ring.reverse()
        object.__setattr__(self, "vertices", tuple(ring))

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    @property
    def area(self) -> Fraction:
        return signed_area2(self.vertices) / 2

    def is_convex(self) -> bool:
        v = self.vertices
        n = len(v)
        if len(set(v)) != n:
            return False
        return all(orientation(v[i - 1], v[i], v[(i + 1) % n]) > 0 for i in range(n))

    def is_simple(self) -> bool:
        edges = self.edges()
        n = len(edges)
        for i in range(n):
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                a, b = edges[i]
                c, d = edges[j]
                hit = segment_intersection(Segment(a, b), Segment(c, d))
                if hit is None:
                    continue
                if isinstance(hit, Segment):
                    return False
                if hit not in (a, b) or hit not in (c, d):
                    return False
        return True

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def contains(self, p: Point) -> bool:
        return point_in_polygon(p, self) != "exterior"


def polygon_area(P: Polygon) -> Fraction:
    return P.area


def point_in_polygon(p: Point, P) -> str:
    """'interior', 'boundary' or 'exterior'; ``P`` is a Polygon or a ring."""
    verts = P.vertices if isinstance(P, Polygon) else P
    n = len(verts)
    inside = False
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if on_closed_segment(p, a, b):
            return "boundary"
        if (a.y > p.y) != (b.y > p.y):
            x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x:
                inside = not inside
    return "interior" if inside else "exterior"


def ring_line_set(verts: Sequence[Point], line: Line) -> IntervalSet:
    """Parameters of ``line`` lying in the closed region bounded by ``verts``."""
    ts = set()
    pieces = []
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        hit = segment_line_param(line, a, b)
        if hit is None:
            continue
        if hit[0] == "point":
            ts.add(hit[1])
        else:
            lo, hi = sorted(hit[1:])
            ts.add(lo)
            ts.add(hi)
            pieces.append(Interval(lo, hi))
    if not ts:
        return IntervalSet()
    order = sorted(ts)
    pieces.extend(Interval(t, t) for t in order)
    for lo, hi in zip(order, order[1:]):
        if point_in_polygon(line.at((lo + hi) / 2), verts) != "exterior":
            pieces.append(Interval(lo, hi))
    return IntervalSet(pieces)


def polygon_line_set(P: Polygon, line: Line) -> IntervalSet:
    return ring_line_set(P.vertices, line)


def segment_in_polygon(a: Point, b: Point, P: Polygon) -> bool:
    """Closed segment [a, b] inside the closed polygon."""
    if a == b:
        return P.contains(a)
    return polygon_line_set(P, line_through(a, b)).covers(IntervalSet.closed(0, 1))


# ---------------------------------------------------------------- convex sets

def convex_hull(points: Iterable[Point]) -> tuple:
    """CCW hull vertices without collinear points; 1 or 2 points for
    degenerate input."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return tuple(hull)


def affine_dim(points: Sequence[Point]) -> int:
    return min(len(points), 3) - 1


def clip_convex(points: Sequence[Point], h: HalfPlane) -> tuple:
    """Convex set (hull vertex list) intersected with the closure of ``h``."""
    pts = list(points)
    if not pts:
        return ()
    out = []
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        vp, vq = h.value(p), h.value(q)
        if vp <= 0:
            out.append(p)
        if (vp < 0 < vq) or (vq < 0 < vp):
            out.append(lerp(p, q, vp / (vp - vq)))
    return convex_hull(out)


def convex_intersection(a: Sequence[Point], b: Sequence[Point]) -> tuple:
    """Intersection of two convex hull vertex lists (either may be degenerate)."""
    if not a or not b:
        return ()
    if len(b) >= 3:
        out = tuple(a)
        for p, q in zip(b, b[1:] + b[:1]):
            out = clip_convex(out, HalfPlane.left_of(p, q))
            if not out:
                return ()
        return out
    if len(a) >= 3:
        return convex_intersection(b, a)
    # both degenerate
    if len(a) == 1:
        return tuple(a) if in_convex(a[0], b) else ()
    if len(b) == 1:
        return tuple(b) if in_convex(b[0], a) else ()
    hit = segment_intersection(Segment(a[0], a[1]), Segment(b[0], b[1]))
    if hit is None:
        return ()
    if isinstance(hit, Segment):
        return convex_hull([hit.a, hit.b])
    return (hit,)


def in_convex(p: Point, hull: Sequence[Point]) -> bool:
    if len(hull) == 0:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return on_closed_segment(p, hull[0], hull[1])
    n = len(hull)
    return all(orientation(hull[i], hull[(i + 1) % n], p) >= 0 for i in range(n))


def in_convex_interior(p: Point, hull: Sequence[Point]) -> bool:
    n = len(hull)
    if n < 3:
        return False
    return all(orientation(hull[i], hull[(i + 1) % n], p) > 0 for i in range(n))


def convex_area(hull: Sequence[Point]) -> Fraction:
    if len(hull) < 3:
        return Fraction(0)
    return signed_area2(hull) / 2


def polygon_kernel(P) -> tuple:
    """Kernel of a polygon (``Polygon`` or CCW ring) as hull vertex list.

    Affine dimension of the result: ``affine_dim`` (-1 for empty)."""
    verts = P.vertices if isinstance(P, Polygon) else tuple(P)
    K = convex_hull(verts)
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if a == b:
            continue
        K = clip_convex(K, HalfPlane.left_of(a, b))
        if not K:
            return ()
    return K


def kernel_kind(K: Sequence[Point]) -> str:
    return ("empty", "point", "segment", "polygon")[min(len(K), 3)]


# ---------------------------------------------------------------- angles

def _half(d: Point) -> int:
    return 0 if d.y > 0 or (d.y == 0 and d.x > 0) else 1


def angle_cmp(d1: Point, d2: Point) -> int:
    """Compare directions by polar angle in [0, 2 pi)."""
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    return -sign(cross(d1, d2))


angle_key = functools.cmp_to_key(angle_cmp)


def ccw_from(ref: Point, d: Point):
    """Sort key for the counter-clockwise angle from ``ref`` to ``d``."""
    c = cross(ref, d)
    h = 0 if c > 0 or (c == 0 and dot(ref, d) > 0) else 1
    return (h, _CrossKey(ref, d))


class _CrossKey:
    __slots__ = ("ref", "d")

    def __init__(self, ref, d):
        self.ref, self.d = ref, d

    def __lt__(self, other):
        return cross(self.d, other.d) > 0

    def __eq__(self, other):
        return cross(self.d, other.d) == 0


# ---------------------------------------------------------------- clipping

def clip(P: Polygon, h: HalfPlane) -> list:
    """Closed polygon intersected with the closure of ``h``.

    Returns a list of polygons (at most one when P is convex); boundary pieces
    of zero width are dropped."""
    h = h.closure()
    verts = P.vertices
    vals = [h.value(v) for v in verts]
    if all(v <= 0 for v in vals):
        return [P]
    if all(v >= 0 for v in vals):
        return []
    ring = []
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        va, vb = vals[i], vals[(i + 1) % n]
        ring.append((a, va))
        if va * vb < 0:
            ring.append((lerp(a, b, va / (va - vb)), Fraction(0)))
    normal_in = Point(-h.a, -h.b)
    edges = []
    m = len(ring)
    for i in range(m):
        (a, va), (b, vb) = ring[i], ring[(i + 1) % m]
        if va > 0 or vb > 0 or a == b:
            continue
        if va == 0 and vb == 0:
            left = Point(a.y - b.y, b.x - a.x)
            if dot(left, normal_in) <= 0:
                continue
        edges.append((a, b))
    line_dir = Point(-h.b, h.a)
    on_line = sorted({p for p, v in ring if v == 0}, key=lambda p: dot(p, line_dir))
    for a, b in zip(on_line, on_line[1:]):
        if point_in_polygon(midpoint(a, b), P) == "interior":
            edges.append((a, b))
    return [Polygon(r) for r in _trace_rings(edges) if _ring_ok(r)]


def _ring_ok(r) -> bool:
    ring = _normal_ring(r)
    return len(ring) >= 3 and signed_area2(ring) != 0


def _trace_rings(edges) -> list:
    out_edges = {}
    for a, b in edges:
        out_edges.setdefault(a, []).append(b)
    used = set()
    rings = []
    for a, b in edges:
        if (a, b) in used:
            continue
        ring = [a]
        cur, nxt = a, b
        used.add((a, b))
        while nxt != a or not ring:
            ring.append(nxt)
            back = cur - nxt
            options = [c for c in out_edges.get(nxt, []) if (nxt, c) not in used]
            if not options:
                break
            forward = [c for c in options if cross(back, c - nxt) != 0 or dot(back, c - nxt) < 0]
            options = forward or options
            c = max(options, key=lambda c: ccw_from(back, c - nxt))
            used.add((nxt, c))
            cur, nxt = nxt, c
            if len(ring) > 4 * len(edges) + 4:
                break
        rings.append(ring)
    return rings


def clip_one(P: Polygon, h: HalfPlane) -> Optional[Polygon]:
    parts = clip(P, h)
    if not parts:
        return None
    if len(parts) > 1:
        raise InvalidInput("clip produced %d components" % len(parts))
    return parts[0]


# ---------------------------------------------------------------- unions

def star_union(polygons: Sequence[Polygon], center: Point) -> Polygon:
    """Union of polygons that are all star-shaped about the common interior
    point ``center``."""
    cand = set()
    for P in polygons:
        cand.update(P.vertices)
    for i, P in enumerate(polygons):
        for Q in polygons[i + 1:]:
            for a, b in P.edges():
                for c, d in Q.edges():
                    hit = segment_intersection(Segment(a, b), Segment(c, d))
                    if isinstance(hit, Point):
                        cand.add(hit)
                    elif isinstance(hit, Segment):
                        cand.update((hit.a, hit.b))
    keep = [p for p in cand
            if p != center and all(point_in_polygon(p, P) != "interior" for P in polygons)]
    keep.sort(key=lambda p: angle_key(p - center))
    return Polygon(keep)


def halfplane_line_set(h: HalfPlane, line: Line) -> IntervalSet:
    """Parameters of ``line`` inside ``h``."""
    v0 = h.value(line.origin)
    v1 = h.a * line.direction.x + h.b * line.direction.y
    if v1 == 0:
        return IntervalSet.line() if h.contains(line.origin) else IntervalSet()
    t = -v0 / v1
    if v1 > 0:
        return IntervalSet([Interval(None, t, False, h.closed)])
    return IntervalSet([Interval(t, None, h.closed, False)])
