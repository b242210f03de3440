"""Punctured polygonal regions ``X = S \\ M``.

``S`` is a finite union of pairwise disjoint closed polygons, optionally
with closed "antenna" segments attached (the only way ``S`` can fail to be
2-dimensional).  ``M`` is a finite set of points and segments.  After
:func:`normalize` every feature lies either entirely on ``bd S`` or has its
relative interior in ``int S``; collinear overlapping features are merged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import geom
from .errors import FeatureOutsideS, HoleCreated, InvalidInput
from .geom import Line, Point, Polygon, Segment
from .intervals import Interval, IntervalSet


@dataclass(frozen=True)
class MissingFeature:
    """A removed point or segment.  Points are stored as degenerate closed
    segments so that every feature has the same shape."""

    segment: Segment
    location: str = "interior"

    @classmethod
    def point(cls, p: Point, location: str = "interior") -> "MissingFeature":
        return cls(Segment(p, p), location)

    @property
    def is_point(self) -> bool:
        return self.segment.a == self.segment.b

    @property
    def at(self) -> Point:
        return self.segment.a

    @property
    def endpoints(self):
        return (self.segment.a,) if self.is_point else (self.segment.a, self.segment.b)

    def contains(self, p: Point) -> bool:
        return self.segment.contains(p)

    def on_line(self, line: Line) -> IntervalSet:
        return geom.segment_set_on_line(self.segment, line)


def canonical_line(a: Point, b: Point) -> Line:
    """A representation of line ab that depends only on the line."""
    h = geom.HalfPlane.left_of(a, b)
    k = h.a if h.a != 0 else h.b
    A, B, C = h.a / k, h.b / k, h.c / k
    n2 = A * A + B * B
    return Line(Point(A * C / n2, B * C / n2), Point(-B, A))


@dataclass(frozen=True)
class PuncturedRegion:
    components: tuple
    features: tuple = ()
    antennae: tuple = ()

    # ------------------------------------------------------------ structure
    @property
    def S(self) -> Polygon:
        if len(self.components) != 1:
            raise InvalidInput("S has %d polygon components" % len(self.components))
        return self.components[0]

    @property
    def M(self) -> tuple:
        return self.features

    @cached_property
    def M_i(self) -> tuple:
        return tuple(f for f in self.features if f.location == "interior")

    @cached_property
    def M_b(self) -> tuple:
        return tuple(f for f in self.features if f.location == "boundary")

    @cached_property
    def interior_points(self) -> tuple:
        return tuple(f.at for f in self.M_i if f.is_point)

    @property
    def connected_polygon(self) -> bool:
        return len(self.components) == 1 and not self.antennae

    @cached_property
    def vertices(self) -> tuple:
        out = []
        for P in self.components:
            out.extend(P.vertices)
        for s in self.antennae:
            out.extend((s.a, s.b))
        return tuple(dict.fromkeys(out))

    @cached_property
    def critical_points(self) -> tuple:
        """Vertices of S, antenna ends and feature endpoints."""
        pts = list(self.vertices)
        for f in self.features:
            pts.extend(f.endpoints)
        return tuple(dict.fromkeys(pts))

    def edges(self):
        for P in self.components:
            yield from P.edges()

    @cached_property
    def area(self) -> Fraction:
        return sum((P.area for P in self.components), Fraction(0))

    def bbox(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def boundary_full(self) -> bool:
        """True iff M_b is all of bd S."""
        if self.antennae:
            return False
        for a, b in self.edges():
            line = geom.line_through(a, b)
            got = IntervalSet()
            for f in self.M_b:
                got = got | f.on_line(line)
            if not got.covers(IntervalSet.closed(0, 1)):
                return False
        return True

    # ------------------------------------------------------------ membership
    def in_S(self, p: Point) -> bool:
        return any(P.contains(p) for P in self.components) or any(
            s.contains(p) for s in self.antennae)

    def contains(self, p: Point) -> bool:
        return self.in_S(p) and not any(f.contains(p) for f in self.features)

    __contains__ = contains

    def S_on_line(self, line: Line) -> IntervalSet:
        out = IntervalSet()
        for P in self.components:
            out = out | geom.polygon_line_set(P, line)
        for s in self.antennae:
            out = out | geom.segment_set_on_line(s, line)
        return out

    def M_on_line(self, line: Line) -> IntervalSet:
        out = IntervalSet()
        for f in self.features:
            out = out | f.on_line(line)
        return out

    def line_set(self, line: Line) -> IntervalSet:
        """Parameters t with ``line.at(t)`` in X."""
        return self.S_on_line(line) - self.M_on_line(line)

    def boundary_on_line(self, line: Line) -> IntervalSet:
        out = IntervalSet()
        for a, b in self.edges():
            out = out | geom.segment_set_on_line(Segment(a, b), line)
        for s in self.antennae:
            out = out | geom.segment_set_on_line(s, line)
        return out

    def _segment_S_set(self, u: Point, v: Point) -> IntervalSet:
        # S on the line through u, v restricted to a window around [0, 1]
        line = geom.line_through(u, v)
        lox, hix = min(u.x, v.x), max(u.x, v.x)
        loy, hiy = min(u.y, v.y), max(u.y, v.y)
        out = IntervalSet()
        for P in self.components:
            x0, y0, x1, y1 = P.bbox()
            if x1 < lox or x0 > hix or y1 < loy or y0 > hiy:
                continue
            out = out | geom.polygon_line_set(P, line)
        for s in self.antennae:
            out = out | geom.segment_set_on_line(s, line)
        return out

    def sees(self, u: Point, v: Point) -> bool:
        """Open segment (u, v) lies in X.  ``sees(u, u)`` is True."""
        if u == v:
            return True
        line = geom.line_through(u, v)
        window = IntervalSet([Interval(Fraction(0), Fraction(1), False, False)])
        if not self._segment_S_set(u, v).covers(window):
            return False
        for f in self.features:
            if f.on_line(line) & window:
                return False
        return True

    def closed_segment_in_X(self, u: Point, v: Point) -> bool:
        return self.contains(u) and self.contains(v) and self.sees(u, v)

    def is_two_dimensional_at(self, p: Point) -> bool:
        return any(P.contains(p) for P in self.components)

    def with_features(self, features: Iterable[MissingFeature]) -> "PuncturedRegion":
        return normalize(list(self.components), [f.segment for f in features],
                         list(self.antennae))


# ---------------------------------------------------------------- building

def _as_segment(raw) -> Segment:
    if isinstance(raw, MissingFeature):
        return raw.segment
    if isinstance(raw, Segment):
        return raw
    if isinstance(raw, Point):
        return Segment(raw, raw)
    if isinstance(raw, tuple) and len(raw) == 2 and not isinstance(raw[0], (tuple, Point)):
        p = geom.pt(*raw)
        return Segment(p, p)
    raise InvalidInput("cannot interpret feature %r" % (raw,))


def _intervals_to_segments(line: Line, s: IntervalSet) -> list:
    out = []
    for iv in s:
        if iv.is_point:
            p = line.at(iv.lo)
            out.append(Segment(p, p))
            continue
        closure = {(True, True): "closed", (False, False): "open",
                   (False, True): "half_open_a", (True, False): "half_open_b"}
        out.append(Segment(line.at(iv.lo), line.at(iv.hi),
                           closure[(iv.lo_closed, iv.hi_closed)]))
    return out


def normalize(S, M: Sequence = (), antennae: Sequence = ()) -> PuncturedRegion:
    """Build a :class:`PuncturedRegion`, classifying and merging features."""
    comps = [S] if isinstance(S, Polygon) else list(S)
    comps = [P if isinstance(P, Polygon) else Polygon(P) for P in comps]
    ants = tuple(Segment(s.a, s.b) if isinstance(s, Segment) else Segment(*s) for s in antennae)
    for s in ants:
        if s.a == s.b:
            raise InvalidInput("degenerate antenna")
    for P in comps:
        if not P.is_simple():
            raise InvalidInput("polygon is not simple")
    for i, P in enumerate(comps):
        for Q in comps[i + 1:]:
            if _polygons_meet(P, Q):
                raise InvalidInput("polygon components intersect")
    base = PuncturedRegion(tuple(comps), (), ants)

    # group features by supporting line; isolated points separately
    by_line: dict = {}
    points = set()
    for raw in M:
        seg = _as_segment(raw)
        if seg.a == seg.b:
            if not base.in_S(seg.a):
                raise FeatureOutsideS("point %r not in S" % (seg.a,))
            points.add(seg.a)
            continue
        line = canonical_line(seg.a, seg.b)
        closure = geom.segment_set_on_line(Segment(seg.a, seg.b), line)
        if not base.S_on_line(line).covers(closure):
            raise FeatureOutsideS("segment %r leaves S" % (seg,))
        key = (line.origin, line.direction)
        prev = by_line.get(key, (line, IntervalSet()))[1]
        by_line[key] = (line, prev | geom.segment_set_on_line(seg, line))

    feats = []
    for line, s in by_line.values():
        bd = base.boundary_on_line(line)
        for part, loc in ((s & bd, "boundary"), (s - bd, "interior")):
            for seg in _intervals_to_segments(line, part):
                feats.append(MissingFeature(seg, loc))
    covered = [f for f in feats]
    for p in sorted(points):
        if any(f.contains(p) for f in covered):
            continue
        loc = "interior" if _in_int_S(base, p) else "boundary"
        feats.append(MissingFeature.point(p, loc))
    feats.sort(key=_feature_key)
    region = PuncturedRegion(tuple(comps), tuple(feats), ants)
    _check_holes(region)
    return region


def _feature_key(f: MissingFeature):
    s = f.segment
    return (0 if f.location == "interior" else 1, s.a, s.b, s.closure)


def _in_int_S(X: PuncturedRegion, p: Point) -> bool:
    return any(geom.point_in_polygon(p, P) == "interior" for P in X.components)


def _polygons_meet(P: Polygon, Q: Polygon) -> bool:
    for a, b in P.edges():
        for c, d in Q.edges():
            if geom.segment_intersection(Segment(a, b), Segment(c, d)) is not None:
                return True
    return P.contains(Q.vertices[0]) or Q.contains(P.vertices[0])


def _check_holes(X: PuncturedRegion) -> None:
    """Reject interior segment features whose union encloses a region."""
    segs = [f.segment for f in X.M_i if not f.is_point]
    if len(segs) < 3:
        return
    nodes: dict = {}

    def node(p):
        return nodes.setdefault(p, len(nodes))

    parent = []

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edges = []
    for i, s in enumerate(segs):
        pts = {s.a, s.b}
        for j, t in enumerate(segs):
            if i != j:
                hit = geom.segment_intersection(Segment(s.a, s.b), Segment(t.a, t.b))
                if isinstance(hit, Point):
                    pts.add(hit)
        line = geom.line_through(s.a, s.b)
        pts = sorted(pts, key=line.param)
        for p, q in zip(pts, pts[1:]):
            if X.contains(p) or X.contains(q):
                continue  # an unremoved point breaks the chain
            edges.append((node(p), node(q)))
    parent.extend(range(len(nodes)))
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            raise HoleCreated("interior features enclose a region")
        parent[ri] = rj


def region(S, M=(), antennae=()) -> PuncturedRegion:
    return normalize(S, M, antennae)


# ---------------------------------------------------------------- queries

def lnc_points(S) -> list:
    """Reflex (and pinch) vertices of S, clockwise around their hull."""
    comps = S.components if isinstance(S, PuncturedRegion) else [S]
    out = []
    for P in comps:
        v = P.vertices
        n = len(v)
        seen = set()
        for i in range(n):
            if v[i] in seen:
                continue
            if geom.orientation(v[i - 1], v[i], v[(i + 1) % n]) < 0 or v.count(v[i]) > 1:
                out.append(v[i])
                seen.add(v[i])
    return order_clockwise(out)


def order_clockwise(points: Sequence[Point]) -> list:
    pts = list(dict.fromkeys(points))
    if len(pts) <= 2:
        return sorted(pts)
    n = len(pts)
    c = Point(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)
    if all(geom.orientation(pts[0], pts[1], p) == 0 for p in pts):
        return sorted(pts)
    pts.sort(key=lambda p: geom.angle_key(p - c), reverse=True)
    # start from the lexicographically smallest point for determinism
    k = pts.index(min(pts))
    return pts[k:] + pts[:k]


def is_two_dimensional_at(X, p: Point) -> bool:
    if isinstance(X, Polygon):
        return X.contains(p)
    return X.is_two_dimensional_at(p)


def check_interior_points_in_kernel(X: PuncturedRegion) -> None:
    """Raise :class:`LemmaViolation` if an interior missing point lies
    outside ker S (such an X has three pairwise invisible points)."""
    from .errors import LemmaViolation

    if not X.interior_points:
        return
    K = kernel_of(X)
    for p in X.interior_points:
        if not geom.in_convex(p, K):
            raise LemmaViolation("interior missing point %r is outside ker S" % (p,),
                                 certificate={"point": p})


def kernel_of(X: PuncturedRegion) -> tuple:
    if len(X.components) != 1 or X.antennae:
        return ()
    return geom.polygon_kernel(X.S)


def in_kernel_X(X: PuncturedRegion, x: Point) -> bool:
    """Exact test that x sees every point of X (x need not lie in X).

    Visibility from x fails exactly along lines through x and a critical
    point, or along a whole open angular range; both are caught by checking
    that on every line through x and a critical point, and through x and a
    midpoint of consecutive critical directions, X meets the line in a set
    containing the open hull of itself, and that x's own line pieces are
    connected through x."""
    if not X.in_S(x):
        return False
    dirs = []
    for z in X.critical_points:
        if z != x:
            dirs.append(z - x)
    if not dirs:
        return True
    dirs.sort(key=geom.angle_key)
    probe = list(dirs)
    for d, e in zip(dirs, dirs[1:] + dirs[:1]):
        probe.append(d.scale(1) + e if geom.cross(d, e) != 0 or geom.dot(d, e) > 0 else
                     Point(-d.y, d.x))
    for d in probe:
        if d.x == 0 and d.y == 0:
            continue
        line = Line(x, d)
        s = X.line_set(line) | IntervalSet.point(0)
        if not _sees_all_on_line(s):
            return False
    return True


def _sees_all_on_line(s: IntervalSet) -> bool:
    # x is at parameter 0; every t in s needs (0, t) inside s
    if not s:
        return True
    hull = s.hull().intervals[0]
    lo = hull.lo if hull.lo is not None and hull.lo < 0 else Fraction(0)
    hi = hull.hi if hull.hi is not None and hull.hi > 0 else Fraction(0)
    return s.covers_open(lo, 0) and s.covers_open(0, hi)


def invisible_from(X: PuncturedRegion, q: Point, points: Iterable[Point]) -> list:
    return [p for p in points if not X.sees(q, p)]


class VisibilityOracle:
    """Fast exact ``sees`` for a fixed finite point set.

    Coordinates are scaled to integers by a common denominator; the generic
    configuration (no touching, no collinearity) is decided with integer
    orientation tests and everything else falls back to
    :meth:`PuncturedRegion.sees`."""

    def __init__(self, X: PuncturedRegion, points: Iterable[Point]):
        import math

        self.X = X
        pts = list(X.critical_points) + list(points)
        den = 1
        for p in pts:
            den = math.lcm(den, p.x.denominator, p.y.denominator)
        self.den = 2 * den
        self._cache = {}
        self.edges = []
        for P in X.components:
            for a, b in P.edges():
                self.edges.append((self._int(a), self._int(b)))
        self.cones = {}
        for P in X.components:
            v = P.vertices
            for i in range(len(v)):
                w = self._int(v[i])
                self.cones.setdefault(w, []).append(
                    (self._int(v[i - 1]), self._int(v[(i + 1) % len(v)])))
        self.feats = []
        for f in X.features:
            self.feats.append((self._int(f.segment.a), self._int(f.segment.b)))
        self.simple = not X.antennae

    def _int(self, p):
        got = self._cache.get(p)
        if got is not None or p in self._cache:
            return got
        got = self._cache[p] = self._scale(p)
        return got

    def _scale(self, p):
        d = self.den
        x, y = p.x * d, p.y * d
        if x.denominator != 1 or y.denominator != 1:
            return None
        return (int(x), int(y))

    def sees(self, u: Point, v: Point) -> bool:
        if not self.simple:
            return self.X.sees(u, v)
        U, V = self._int(u), self._int(v)
        if U is None or V is None:
            return self.X.sees(u, v)
        if U == V:
            return True
        ux, uy = U
        vx, vy = V
        dx, dy = vx - ux, vy - uy
        for W, sx, sy in ((U, dx, dy), (V, -dx, -dy)):
            cone = self.cones.get(W)
            if cone is None:
                continue
            if len(cone) > 1:
                return self._slow(u, v, U, V)
            (px, py), (nx, ny) = cone[0]
            wx, wy = W
            c1 = (wx - px) * sy - (wy - py) * sx
            c2 = (nx - wx) * sy - (ny - wy) * sx
            if c1 == 0 or c2 == 0:
                return self._slow(u, v, U, V)
            turn = (wx - px) * (ny - wy) - (wy - py) * (nx - wx)
            if turn > 0 and not (c1 > 0 and c2 > 0):
                return False
            if turn < 0 and not (c1 > 0 or c2 > 0):
                return False
        lox, hix = min(ux, vx), max(ux, vx)
        loy, hiy = min(uy, vy), max(uy, vy)
        for (ax, ay), (bx, by) in self.edges:
            if max(ax, bx) < lox or min(ax, bx) > hix or max(ay, by) < loy or min(ay, by) > hiy:
                continue
            if (ax, ay) in (U, V) or (bx, by) in (U, V):
                continue
            o1 = dx * (ay - uy) - dy * (ax - ux)
            o2 = dx * (by - uy) - dy * (bx - ux)
            if (o1 > 0 and o2 > 0) or (o1 < 0 and o2 < 0):
                continue
            ex, ey = bx - ax, by - ay
            o3 = ex * (uy - ay) - ey * (ux - ax)
            o4 = ex * (vy - ay) - ey * (vx - ax)
            if (o3 > 0 and o4 > 0) or (o3 < 0 and o4 < 0):
                continue
            if o1 != 0 and o2 != 0:
                if o3 != 0 and o4 != 0:
                    return False  # transversal crossing of an edge interior
                if o3 == 0 and o4 != 0:
                    if o4 < 0:
                        return False  # leaves S at u
                    continue
                if o4 == 0 and o3 != 0:
                    if o3 < 0:
                        return False
                    continue
            return self._slow(u, v, U, V)
        for (ax, ay), (bx, by) in self.feats:
            if max(ax, bx) < lox or min(ax, bx) > hix or max(ay, by) < loy or min(ay, by) > hiy:
                continue
            o1 = dx * (ay - uy) - dy * (ax - ux)
            o2 = dx * (by - uy) - dy * (bx - ux)
            if (o1 > 0 and o2 > 0) or (o1 < 0 and o2 < 0):
                continue
            ex, ey = bx - ax, by - ay
            if ex == 0 and ey == 0:
                if o1 == 0:
                    return self.X.sees(u, v)
                continue
            o3 = ex * (uy - ay) - ey * (ux - ax)
            o4 = ex * (vy - ay) - ey * (vx - ax)
            if (o3 > 0 and o4 > 0) or (o3 < 0 and o4 < 0):
                continue
            if o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
                return False
            return self.X.sees(u, v)
        # no contact with the boundary: (u, v) is inside or outside as a whole
        mx, my = (ux + vx) // 2, (uy + vy) // 2
        return self._inside(mx, my)

    def _inside(self, px, py) -> bool:
        inside = False
        for (ax, ay), (bx, by) in self.edges:
            if (ay > py) != (by > py):
                o = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
                if (o > 0) == (by > ay):
                    inside = not inside
        return inside

    def _slow(self, u, v, U, V) -> bool:
        """Exact check: cut (u, v) at every boundary contact and test the
        midpoint of each piece against the closed polygon set."""
        ux, uy = U
        dx, dy = V[0] - ux, V[1] - uy
        dd = dx * dx + dy * dy
        ts = {Fraction(0), Fraction(1)}
        for (ax, ay), (bx, by) in self.edges:
            ex, ey = bx - ax, by - ay
            den = dx * ey - dy * ex
            wx, wy = ax - ux, ay - uy
            if den == 0:
                if dx * wy - dy * wx != 0:
                    continue
                for qx, qy in ((ax, ay), (bx, by)):
                    t = Fraction((qx - ux) * dx + (qy - uy) * dy, dd)
                    if 0 < t < 1:
                        ts.add(t)
                continue
            sn = wx * dy - wy * dx
            tn = wx * ey - wy * ex
            if den < 0:
                den, sn, tn = -den, -sn, -tn
            if 0 <= sn <= den and 0 < tn < den:
                ts.add(Fraction(tn, den))
        order = sorted(ts)
        for t0, t1 in zip(order, order[1:]):
            m = (t0 + t1) / 2
            q, pn = m.denominator, m.numerator
            if not self._in_closed(ux * q + pn * dx, uy * q + pn * dy, q):
                return False
        line = geom.line_through(u, v)
        window = IntervalSet([Interval(Fraction(0), Fraction(1), False, False)])
        for f in self.X.features:
            if f.on_line(line) & window:
                return False
        return True

    def _in_closed(self, px, py, q) -> bool:
        # point (px/q, py/q) in the closed union of the polygon components
        inside = False
        for (ax, ay), (bx, by) in self.edges:
            ax, ay, bx, by = ax * q, ay * q, bx * q, by * q
            o = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
            if o == 0 and min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
                return True
            if (ay > py) != (by > py):
                if (o > 0) == (by > ay):
                    inside = not inside
        return inside


def star(X: PuncturedRegion, a: Point):
    """The set of points x of X with [a, x] in X, as a convex cell.

    The visibility polygon of a is traced sector by sector between the
    directions to critical points; in each sector the first obstacle is one
    edge or removed segment.  Raises :class:`NotConvexStar` when the result
    is not convex (the star of a point need not be)."""
    from .cells import make_cell
    from .errors import NotConvexStar, UnsupportedInput

    if not X.contains(a):
        raise InvalidInput("a is not in X")
    if not X.is_two_dimensional_at(a):
        raise UnsupportedInput("a lies on an antenna")

    def unit(d):
        m = max(abs(d.x), abs(d.y))
        return Point(d.x / m, d.y / m)

    compass = [Point(Fraction(x), Fraction(y)) for x, y in
               ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))]
    dirs = {unit(c - a) for c in X.critical_points if c != a} | set(compass)
    dirs = sorted(dirs, key=geom.angle_key)
    blockers = [Segment(u, v) for u, v in X.edges()] + [f.segment for f in X.features
                                                        if not f.is_point]

    def reach(d):
        line = Line(a, d)
        for iv in X.line_set(line):
            if Fraction(0) in iv:
                return line.at(iv.hi)
        raise NotConvexStar("a is not in X along %r" % (d,))  # pragma: no cover

    def hit(d, L):
        t = geom.cross(L.direction, L.origin - a) / geom.cross(L.direction, d)
        return Point(a.x + d.x * t, a.y + d.y * t)

    ring = []
    for d1, d2 in zip(dirs, dirs[1:] + dirs[:1]):
        for w in (1, 2, 3):
            probe = d1.scale(w) + d2
            h = reach(probe)
            if not any(f.is_point and f.at == h for f in X.features):
                break
        seg = next(s for s in blockers if geom.on_closed_segment(h, s.a, s.b))
        L = geom.line_through(seg.a, seg.b)
        ring.extend((hit(d1, L), hit(d2, L)))
    try:
        V = Polygon(ring)
    except InvalidInput as e:
        raise NotConvexStar(str(e)) from e
    if not V.is_convex():
        raise NotConvexStar("the star of %r is not convex" % (a,))
    cell = make_cell(V.vertices, X, label="st(a)", check=False)
    if cell is None or not cell.is_convex():
        raise NotConvexStar("the star of %r is not convex" % (a,))
    for p in cell.sample_points():
        if not X.sees(a, p):
            raise NotConvexStar("the star of %r is not convex" % (a,))
    return cell
