"""Structure of a closed polygon S with no three pairwise invisible points:
the lnc points, the convex polygon they span, the leaves beyond its edges,
a cover of S by at most three closed convex sets, and the polygonal
relative convex hull used to reduce general closed sets to polygons."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import geom
from .cells import ConvexCell
from .errors import NonConvexLeaf, NonConvexUnion, OriginNotInKernel, RayDegenerate
from .geom import HalfPlane, Point, Polygon
from .region import PuncturedRegion, lnc_points


@dataclass(frozen=True)
class Leaf:
    """Leaf W_i: the boundary path of S from q_i to q_{i+1} (clockwise) and
    the convex polygon it spans together with the base edge."""
    index: int
    path: tuple
    hull: tuple

    @property
    def first_edge(self):
        return self.path[0], self.path[1]

    @property
    def last_edge(self):
        return self.path[-2], self.path[-1]

    @property
    def degenerate(self) -> bool:
        return len(self.hull) < 3

    def edges(self):
        p = self.path
        return [(p[k], p[k + 1]) for k in range(len(p) - 1)]


@dataclass
class StructureAnalysis:
    S: Polygon
    Q: tuple
    convQ: tuple
    leaves: list
    kernel: tuple
    lobes: tuple = ()

    @property
    def n(self) -> int:
        return len(self.Q)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel) - 1 if len(self.kernel) < 3 else 2

    @property
    def edges(self):
        q = self.Q
        n = len(q)
        if n < 2:
            return []
        return [(q[i], q[(i + 1) % n]) for i in range(n)]

    def summary(self) -> dict:
        return {"n": self.n, "Q": [list(p) for p in self.Q],
                "kernel_dim": self.kernel_dim, "leaves": len(self.leaves),
                "lobes": len(self.lobes)}


def _as_polygon(S) -> Polygon:
    if isinstance(S, PuncturedRegion):
        return S.S
    return S


def _cw_ring(S: Polygon) -> list:
    return list(reversed(S.vertices))


def _path(ring: list, a: Point, b: Point) -> list:
    k = ring.index(a)
    out = [a]
    m = len(ring)
    j = (k + 1) % m
    while True:
        out.append(ring[j])
        if ring[j] == b:
            return out
        j = (j + 1) % m


def _split_pinch(S: Polygon) -> Optional[tuple]:
    v = list(S.vertices)
    for i, p in enumerate(v):
        if v.count(p) > 1:
            j = v.index(p, i + 1)
            return p, Polygon(v[i:j]), Polygon(v[j:] + v[:i])
    return None


def _lobes_for_segment_kernel(S: Polygon, K: tuple) -> tuple:
    u, w = K[0], K[1]
    out = []
    for h in (HalfPlane.left_of(u, w), HalfPlane.left_of(w, u)):
        parts = geom.clip(S, h)
        if len(parts) != 1 or not parts[0].is_convex():
            raise NonConvexLeaf("a side of the kernel line is not convex")
        out.append(parts[0])
    if out[0].area + out[1].area != S.area:
        raise NonConvexLeaf("the kernel line does not split S into two convex parts")
    return tuple(out)


def analyze(S) -> StructureAnalysis:
    """Lnc points, conv Q, leaves and kernel of a polygon S.

    Raises :class:`NonConvexLeaf` when S does not decompose into conv Q and
    convex leaves (a structural certificate that three pairwise invisible
    points exist)."""
    S = _as_polygon(S)
    K = geom.polygon_kernel(S)
    pinch = _split_pinch(S)
    if pinch is not None:
        q, A, B = pinch
        if not (A.is_convex() and B.is_convex()):
            raise NonConvexLeaf("a lobe at the pinch %r is not convex" % (q,))
        return StructureAnalysis(S, (q,), (q,), [], K, (A, B))
    Q = tuple(lnc_points(S))
    n = len(Q)
    if n == 0:
        return StructureAnalysis(S, (), (), [], K)
    if not K:
        raise NonConvexLeaf("S is connected, not convex and has an empty kernel")
    lobes = ()
    if len(K) == 2:
        lobes = _lobes_for_segment_kernel(S, K)
    ring = _cw_ring(S)
    convQ = geom.convex_hull(Q)
    if n >= 3 and len(convQ) != n:
        raise NonConvexLeaf("an lnc point is not a vertex of conv Q")
    leaves = []
    if n == 1:
        path = tuple(_path(ring, Q[0], Q[0]))
        leaves.append(Leaf(0, path, tuple(geom.convex_hull(path))))
    else:
        for i in range(n):
            a, b = Q[i], Q[(i + 1) % n]
            path = tuple(_path(ring, a, b))
            h = HalfPlane.left_of(a, b)
            if any(not h.contains(p) for p in path):
                raise NonConvexLeaf("leaf %d leaves its half-plane" % i)
            if len(path) > 2:
                P = Polygon(path)
                if not P.is_convex():
                    raise NonConvexLeaf("leaf %d is not convex" % i)
                hull = P.vertices
            else:
                raise NonConvexLeaf("leaf %d is degenerate" % i)
            leaves.append(Leaf(i, path, tuple(hull)))
        total = sum(geom.convex_area(L.hull) for L in leaves) + geom.convex_area(convQ)
        if total != S.area:
            raise NonConvexLeaf("S is not the union of conv Q and its leaves")
    return StructureAnalysis(S, Q, convQ, leaves, K, lobes)


# ---------------------------------------------------------------- closed cover

def _group_cell(parts: Sequence[tuple], label: str) -> ConvexCell:
    pts = [p for part in parts for p in part]
    hull = geom.convex_hull(pts)
    area = sum(geom.convex_area(part) for part in parts)
    if geom.convex_area(hull) != area:
        raise NonConvexUnion("group %s is not convex" % label)
    return ConvexCell(hull, (), label)


def valentine_cover(S) -> list:
    """At most three closed convex polygons whose union is S."""
    S = _as_polygon(S)
    st = analyze(S)
    n = st.n
    if n == 0:
        return [ConvexCell(S.vertices, (), "S")]
    if st.lobes:
        return [ConvexCell(L.vertices, (), "lobe%d" % k) for k, L in enumerate(st.lobes)]
    if n == 1:
        (L,) = st.leaves
        q = L.path[0]
        out = []
        h = HalfPlane.left_of(L.path[-2], q)
        for k, side in enumerate((h, h.complement())):
            parts = geom.clip(S, side)
            if len(parts) != 1 or not parts[0].is_convex():
                raise NonConvexUnion("a side of the reflex vertex is not convex")
            out.append(ConvexCell(parts[0].vertices, (), "side%d" % k))
        return out
    if n == 2:
        return [ConvexCell(L.hull, (), "W%d" % L.index) for L in st.leaves]
    W = [L.hull for L in st.leaves]
    C = st.convQ
    # rotate so that a breakable adjacency (if any) sits at (n-1, 0)
    start = 0
    if n % 2 == 1:
        for i in range(n):
            try:
                _group_cell([C, W[i], W[(i + 1) % n]], "pair")
            except NonConvexUnion:
                continue
            start = (i + 1) % n
            break
        else:
            start = None
    if n % 2 == 0 or start is not None:
        s = start or 0
        order = [(s + k) % n for k in range(n)]
        even = [W[order[k]] for k in range(0, n, 2)]
        odd = [W[order[k]] for k in range(1, n, 2)]
        return [_group_cell([C] + even, "even"), _group_cell([C] + odd, "odd")]
    odd = [W[k] for k in range(0, n - 1, 2)]
    even = [W[k] for k in range(1, n - 1, 2)]
    return [_group_cell([C] + odd, "odd"), _group_cell([C] + even, "even"),
            _group_cell([C, W[n - 1]], "last")]


# ---------------------------------------------------------------- relative hull

@dataclass
class SunHullState:
    origin: Point
    F_1: tuple
    added: tuple
    rays: tuple
    sun: tuple
    triangles: list = field(default_factory=list)

    def to_json(self) -> dict:
        s = lambda p: [str(p.x), str(p.y)]
        return {
            "origin": s(self.origin),
            "F_1": [s(p) for p in self.F_1],
            "added": [s(p) for p in self.added],
            "sun": [s(p) for p in self.sun],
            "triangles": [{"lambda": str(t["lambda"]), "mu": str(t["mu"]),
                           "w": s(t["w"]) if t["w"] is not None else None}
                          for t in self.triangles],
        }


_OFFSETS = ((1, 0), (0, 1), (-1, 0), (0, -1), (-1, -1), (1, 1), (-1, 1), (1, -1))


def _augment(F: list, o: Point, K: tuple) -> tuple:
    from itertools import combinations

    delta = Fraction(1)
    while not all(geom.in_convex_interior(o + Point(dx * delta, dy * delta), K)
                  for dx, dy in _OFFSETS):
        delta /= 2
    cands = [o + Point(dx * delta, dy * delta) for dx, dy in _OFFSETS]
    base = list(dict.fromkeys(F + [o]))
    for k in range(0, 4):
        for extra in combinations(cands, k):
            if geom.in_convex_interior(o, geom.convex_hull(base + list(extra))):
                return tuple(dict.fromkeys(base + list(extra))), tuple(extra)
    raise RayDegenerate("could not surround the origin")  # pragma: no cover


def _segment_in(P: Polygon, a: Point, b: Point) -> bool:
    return geom.segment_in_polygon(a, b, P)


def _max_param(P: Polygon, pivot: Point, ray_end: Point, o: Point) -> Fraction:
    """max t in [0, 1] with [o + t (ray_end - o), pivot] inside P."""
    d = ray_end - o
    if _segment_in(P, ray_end, pivot):
        return Fraction(1)
    cands = set()
    for v in P.vertices:
        if v == pivot:
            continue
        den = geom.cross(v - pivot, d)
        if den == 0:
            continue
        # o + t d, pivot and v collinear
        t = geom.cross(v - pivot, pivot - o) / den
        if 0 < t < 1:
            cands.add(t)
    for t in sorted(cands, reverse=True):
        if _segment_in(P, o + d.scale(t), pivot):
            return t
    raise RayDegenerate("no admissible parameter on a sun ray")


def relative_convex_hull(S, F: Sequence[Point], origin: Point):
    """Polygon P with F in P, P in S, P convex relative to S and origin in
    the interior of ker P.  Returns ``(P, state)``."""
    S = _as_polygon(S)
    o = Point(Fraction(origin[0]), Fraction(origin[1]))
    F = [Point(Fraction(p[0]), Fraction(p[1])) for p in F]
    K = geom.polygon_kernel(S)
    if not geom.in_convex_interior(o, K):
        raise OriginNotInKernel("origin %r is not interior to ker S" % (o,))
    for p in F:
        if not S.contains(p):
            raise OriginNotInKernel("point %r of F is outside S" % (p,))
    F1, added = _augment(F, o, K)
    hull = geom.convex_hull(F1)
    S1 = S
    for a, b in zip(hull, hull[1:] + hull[:1]):
        S1 = geom.clip_one(S1, HalfPlane.left_of(a, b))
    # step 3: last point of S1 on each ray
    ends = {}
    for p in F1:
        if p == o:
            continue
        line = geom.Line(o, p - o)
        iv = [i for i in geom.polygon_line_set(S1, line).intervals if Fraction(0) in i]
        end = line.at(iv[0].hi)
        ends.setdefault(_dir_key(p - o), end)
    sun = sorted(ends.values(), key=lambda e: geom.angle_key(e - o))
    if len(sun) < 3:
        raise RayDegenerate("fewer than three distinct ray directions")
    n = len(sun)
    ring = []
    tris = []
    for i in range(n):
        a, b = sun[i - 1], sun[i]
        lam = _max_param(S1, b, a, o)
        mu = _max_param(S1, a, b, o)
        w = None
        ring.append(a)
        if lam < 1 or mu < 1:
            p1, q1 = o + (a - o).scale(lam), b
            p2, q2 = a, o + (b - o).scale(mu)
            hit = geom.segment_intersection(geom.Segment(p1, q1), geom.Segment(p2, q2))
            if not isinstance(hit, Point):
                raise RayDegenerate("sun triangle %d has no crossing point" % i)
            w = hit
            ring.append(w)
        tris.append({"lambda": lam, "mu": mu, "w": w, "a": a, "b": b})
    P = Polygon(ring)
    state = SunHullState(o, F1, added, tuple(_dir_key(e - o) for e in sun), tuple(sun), tris)
    return P, state


def _dir_key(d: Point) -> Point:
    from math import gcd

    # primitive direction for merging equal arguments
    x, y = d.x, d.y
    den = x.denominator * y.denominator
    xi, yi = int(x * den), int(y * den)
    g = gcd(xi, yi) or 1
    return Point(Fraction(xi // g), Fraction(yi // g))
