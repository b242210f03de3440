"""Invisibility graphs on finite witness sets and lower-bound certificates.

A witness set is a finite sample of X.  Every bound computed here is a
genuine lower bound for the corresponding measure of X, because restricting
to a subset can only make the graph smaller.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import geom
from .errors import PreconditionUnverified, SizeLimit
from .geom import Point
from .region import PuncturedRegion, VisibilityOracle

PARTITION_BUDGET = 16
CHROMATIC_BUDGET = 64


@dataclass(frozen=True)
class WitnessSet:
    points: tuple
    provenance: tuple = ()

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def subset(self, keep) -> "WitnessSet":
        idx = [i for i, p in enumerate(self.points) if keep(p)]
        prov = tuple(self.provenance[i] for i in idx) if self.provenance else ()
        return WitnessSet(tuple(self.points[i] for i in idx), prov)


def witness_set(points, tag="given") -> WitnessSet:
    pts = tuple(dict.fromkeys(points))
    return WitnessSet(pts, (tag,) * len(pts))


def offset_epsilon(X: PuncturedRegion) -> Fraction:
    pts = X.critical_points
    best = None
    for a, b in itertools.combinations(pts, 2):
        d = geom.linf(a, b)
        if best is None or d < best:
            best = d
    return (best if best else Fraction(1)) / 8


def _unit_linf(d: Point) -> Point:
    m = max(abs(d.x), abs(d.y))
    return Point(d.x / m, d.y / m)


def generate_witnesses(X: PuncturedRegion, density: int = 4) -> WitnessSet:
    if density < 1:
        raise ValueError("density must be positive")
    out: dict = {}

    def add(p, tag):
        if p not in out and X.contains(p):
            out[p] = tag

    for v in X.vertices:
        add(v, "vertex")
    for f in X.features:
        for e in f.endpoints:
            add(e, "feature-endpoint")
    for a, b in list(X.edges()) + [(s.a, s.b) for s in X.antennae]:
        line = geom.line_through(a, b)
        for iv in X.line_set(line) & geom.Segment(a, b).param_set():
            if not iv.is_point:
                add(line.at(iv.midpoint()), "midpoint")
    eps = offset_epsilon(X)
    for f in X.features:
        s = f.segment
        if f.is_point:
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                add(Point(s.a.x + dx * eps, s.a.y + dy * eps), "offset")
            continue
        u = _unit_linf(s.b - s.a).scale(eps)
        n = Point(-u.y, u.x)
        for base in (s.a, geom.midpoint(s.a, s.b), s.b):
            add(base + n, "offset")
            add(base - n, "offset")
        add(s.a - u, "offset")
        add(s.b + u, "offset")
    # points just beside a feature endpoint along every edge through it, at
    # two scales since the gaps that matter need not be at critical points
    for a, b in list(X.edges()) + [(s.a, s.b) for s in X.antennae]:
        for scale in (eps, eps / 16):
            u = _unit_linf(b - a).scale(scale)
            for f in X.features:
                for e in f.endpoints:
                    if geom.on_closed_segment(e, a, b):
                        add(e + u, "edge-offset")
                        add(e - u, "edge-offset")
    x0, y0, x1, y1 = X.bbox()
    for i in range(density):
        for j in range(density):
            p = Point(x0 + (x1 - x0) * Fraction(2 * i + 1, 2 * density),
                      y0 + (y1 - y0) * Fraction(2 * j + 1, 2 * density))
            add(p, "grid")
    return WitnessSet(tuple(out), tuple(out.values()))


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class InvisibilityGraph:
    witness: WitnessSet
    adj: tuple  # bitmask per vertex

    @property
    def n(self) -> int:
        return len(self.adj)

    def edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int):
        m = self.adj[i]
        return [j for j in range(self.n) if m >> j & 1]

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def induced(self, idx: Sequence[int]) -> "InvisibilityGraph":
        pos = {v: k for k, v in enumerate(idx)}
        adj = []
        for v in idx:
            m = 0
            for u in self.neighbors(v):
                if u in pos:
                    m |= 1 << pos[u]
            adj.append(m)
        pts = tuple(self.witness.points[i] for i in idx)
        return InvisibilityGraph(WitnessSet(pts), tuple(adj))


def build_graph(X: PuncturedRegion, W) -> InvisibilityGraph:
    if not isinstance(W, WitnessSet):
        W = witness_set(W)
    pts = W.points
    n = len(pts)
    adj = [0] * n
    oracle = VisibilityOracle(X, pts)
    for i in range(n):
        for j in range(i + 1, n):
            if not oracle.sees(pts[i], pts[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return InvisibilityGraph(W, tuple(adj))


# ---------------------------------------------------------------- certificates

@dataclass(frozen=True)
class Certificate:
    """Replayable lower-bound evidence.

    ``kind`` is one of ``clique``, ``odd_circuit``, ``chromatic``,
    ``convex_partition_infeasible`` or ``sector_counting``; ``measure`` is the
    measure bounded (alpha, beta or gamma) and ``value`` the bound."""

    kind: str
    points: tuple
    measure: str
    value: int
    data: dict = field(default_factory=dict, compare=False)

    def implied(self) -> dict:
        """Lower bounds implied for all three measures."""
        order = ("alpha", "beta", "gamma")
        k = order.index(self.measure)
        return {m: (self.value if i >= k else 1) for i, m in enumerate(order)}


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def max_clique(G: InvisibilityGraph) -> list:
    best: list = []

    def expand(R, P):
        nonlocal best
        if not P:
            if len(R) > len(best):
                best = list(R)
            return
        if len(R) + _popcount(P) <= len(best):
            return
        # greedy coloring bound
        order = []
        colors = []
        rest = P
        c = 0
        while rest:
            c += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~G.adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append(v)
                colors.append(c)
        for v, col in zip(reversed(order), reversed(colors)):
            if len(R) + col <= len(best):
                return
            expand(R + [v], P & G.adj[v])
            P &= ~(1 << v)

    expand([], (1 << G.n) - 1)
    return sorted(best)


def clique_number(G: InvisibilityGraph):
    if G.n == 0:
        return 0, Certificate("clique", (), "alpha", 0)
    c = max_clique(G)
    pts = tuple(G.witness.points[i] for i in c)
    return len(c), Certificate("clique", pts, "alpha", len(c))


def shortest_odd_cycle(G: InvisibilityGraph) -> Optional[list]:
    best = None
    for s in range(G.n):
        level = {s: 0}
        parent = {s: None}
        q = deque([s])
        found = None
        while q and found is None:
            u = q.popleft()
            if best is not None and 2 * level[u] + 1 >= len(best):
                break
            for w in G.neighbors(u):
                if w not in level:
                    level[w] = level[u] + 1
                    parent[w] = u
                    q.append(w)
                elif level[w] == level[u] and w != u:
                    found = (u, w)
                    break
        if found is None:
            continue
        u, w = found
        pu, pw = [u], [w]
        while pu[-1] != pw[-1]:
            pu.append(parent[pu[-1]])
            pw.append(parent[pw[-1]])
        cyc = pu + pw[-2::-1]
        if len(set(cyc)) == len(cyc) and (best is None or len(cyc) < len(best)):
            best = cyc
    return best


def find_odd_circuit(G: InvisibilityGraph) -> Optional[Certificate]:
    cyc = shortest_odd_cycle(G)
    if cyc is None:
        return None
    pts = tuple(G.witness.points[i] for i in cyc)
    return Certificate("odd_circuit", pts, "beta", 3, {"length": len(cyc)})


def _colorable(G: InvisibilityGraph, k: int) -> Optional[list]:
    """DSatur-ordered backtracking; returns a coloring or None."""
    n = G.n
    color = [-1] * n
    order_deg = [_popcount(m) for m in G.adj]

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in G.neighbors(v) if color[u] >= 0})
            kv = (sat, order_deg[v], -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def solve(done, used):
        if done == n:
            return True
        v = pick()
        forbidden = {color[u] for u in G.neighbors(v) if color[u] >= 0}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if solve(done + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return list(color) if solve(0, 0) else None


def chromatic_number(G: InvisibilityGraph, budget: int = CHROMATIC_BUDGET):
    if G.n > budget:
        raise SizeLimit("%d witnesses exceed the chromatic budget %d" % (G.n, budget))
    if G.n == 0:
        return 0, Certificate("chromatic", (), "beta", 0)
    lo = max(1, len(max_clique(G)))
    k = lo
    while True:
        col = _colorable(G, k)
        if col is not None:
            break
        k += 1
    pts = G.witness.points
    cert = Certificate("chromatic", tuple(pts), "beta", k, {"coloring": tuple(col)})
    return k, cert


# ---------------------------------------------------------------- partitions

def hull_in_X(X: PuncturedRegion, points: Sequence[Point]) -> bool:
    """conv(points) is contained in X (exact)."""
    from .cells import ConvexCell
    from .verify import cell_in_X

    hull = geom.convex_hull(points)
    if not hull:
        return True
    return cell_in_X(ConvexCell(hull), X)


def partition_classes(X: PuncturedRegion, pts: Sequence[Point], k: int,
                      hull_ok=None) -> Optional[list]:
    """Partition ``pts`` into at most k classes with convex hull in X."""
    pts = sorted(pts)
    if hull_ok is None:
        cache: dict = {}

        def hull_ok(cls):
            key = frozenset(cls)
            if key not in cache:
                cache[key] = hull_in_X(X, list(cls))
            return cache[key]

    n = len(pts)
    ok_pair = [[i == j or hull_ok((pts[i], pts[j])) for j in range(n)] for i in range(n)]
    classes: list = []

    def rec(i):
        if i == n:
            return True
        for c in classes:
            if all(ok_pair[i][j] for j in c) and hull_ok(tuple(pts[j] for j in c) + (pts[i],)):
                c.append(i)
                if rec(i + 1):
                    return True
                c.pop()
        if len(classes) < k:
            classes.append([i])
            if rec(i + 1):
                return True
            classes.pop()
        return False

    if rec(0):
        return [[pts[j] for j in c] for c in classes]
    return None


def convex_partition_number(X: PuncturedRegion, W, budget: int = PARTITION_BUDGET):
    pts = tuple(W.points if isinstance(W, WitnessSet) else W)
    pts = tuple(dict.fromkeys(pts))
    if len(pts) > budget:
        raise SizeLimit("%d witnesses exceed the partition budget %d" % (len(pts), budget))
    if not pts:
        return 0, Certificate("convex_partition_infeasible", (), "gamma", 0)
    cache: dict = {}

    def hull_ok(cls):
        key = frozenset(cls)
        if key not in cache:
            cache[key] = hull_in_X(X, list(cls))
        return cache[key]

    k = 1
    while True:
        part = partition_classes(X, pts, k, hull_ok)
        if part is not None:
            break
        k += 1
    cert = Certificate("convex_partition_infeasible", tuple(sorted(pts)), "gamma", k,
                       {"partition": tuple(tuple(c) for c in part)})
    return k, cert


# ---------------------------------------------------------------- sectors

def _strictly_inside_arc(a: Point, b: Point, u: Point) -> bool:
    """u strictly inside the counter-clockwise open arc from a to b."""
    if geom.cross(a, u) == 0 and geom.dot(a, u) > 0:
        return False
    if geom.cross(b, u) == 0 and geom.dot(b, u) > 0:
        return False
    return geom.ccw_from(a, u) < geom.ccw_from(a, b)


def sectors_met(rays: Sequence[Point], d: Point) -> int:
    """Number of half-open sectors [r_j, r_j+1) meeting the open half-plane
    left of direction ``d`` together with the open ray along ``d``.  A convex
    set that avoids the apex lies in such a region for some d."""
    s = len(rays)
    if s == 1:
        return 1
    neg = Point(-d.x, -d.y)
    count = 0
    for j in range(s):
        a, b = rays[j], rays[(j + 1) % s]
        on_a = geom.cross(a, d) == 0 and geom.dot(a, d) > 0
        if _strictly_inside_arc(d, neg, a) or on_a or _strictly_inside_arc(a, b, d):
            count += 1
    return count


def max_sectors_per_convex_set(rays: Sequence[Point]) -> int:
    cands = []
    s = len(rays)
    for j in range(s):
        a, b = rays[j], rays[(j + 1) % s]
        mid = _bisector(a, b)
        for u in (a, _bisector(a, mid), mid, _bisector(mid, b)):
            cands.extend([u, Point(-u.x, -u.y)])
    return max(sectors_met(rays, d) for d in cands)


def sector_bound(s: int, per_sector_lb: int, m: int) -> int:
    """ceil(s * lb / m): convex sets needed when each of s sectors needs lb
    of them and one set meets at most m sectors."""
    return -(-s * per_sector_lb // m)


def _bisector(a: Point, b: Point) -> Point:
    ua, ub = _unit_linf(a), _unit_linf(b)
    m = ua + ub
    if geom.cross(a, b) > 0 and m != Point(0, 0):
        return m
    if geom.cross(a, b) == 0 and geom.dot(a, b) > 0:
        return Point(-a.y, a.x)
    return Point(-m.x, -m.y) if m != Point(0, 0) else Point(-a.y, a.x)


def sector_of(rays: Sequence[Point], center: Point, p: Point) -> int:
    d = p - center
    s = len(rays)
    for j in range(s):
        a, b = rays[j], rays[(j + 1) % s]
        if geom.cross(a, d) == 0 and geom.dot(a, d) > 0:
            return j
        if _strictly_inside_arc(a, b, d):
            return j
    raise ValueError("point at the center")


def sector_counting_bound(X: PuncturedRegion, rays: Sequence[Point], per_sector_lb: int,
                          center: Point, certificates: Optional[Sequence[Certificate]] = None):
    """k = ceil(s * lb / m) from ``s`` cyclic sectors around ``center``.

    ``rays`` are the sector boundary directions in counter-clockwise order;
    sector j is the half-open angular range [rays[j], rays[j+1]).  When
    ``certificates`` are given, each must lie in its sector and certify at
    least ``per_sector_lb`` convex sets."""
    if X.contains(center):
        raise PreconditionUnverified("the center lies in X")
    s = len(rays)
    m = max_sectors_per_convex_set(rays)
    if certificates is not None:
        if len(certificates) != s:
            raise PreconditionUnverified("need one certificate per sector")
        for j, c in enumerate(certificates):
            if _sector_cert_value(c) < per_sector_lb:
                raise PreconditionUnverified("sector %d certificate is too weak" % j)
            if any(sector_of(rays, center, p) != j for p in c.points):
                raise PreconditionUnverified("sector %d certificate leaves its sector" % j)
    k = sector_bound(s, per_sector_lb, m)
    cert = Certificate("sector_counting", (center,), "gamma", k,
                       {"rays": tuple(rays), "sectors": s, "per_sector_lb": per_sector_lb,
                        "max_sectors": m, "sector_certificates": tuple(certificates or ())})
    return k, cert


def _sector_cert_value(c: Certificate) -> int:
    # a convex subset of X is a seeing subset, so beta bounds count convex sets
    return c.value if c.measure in ("beta", "gamma") else min(c.value, 2)


def sector_certificates(X: PuncturedRegion, rays, center, W: WitnessSet) -> list:
    """Shortest odd circuit among the witnesses of each sector (or None)."""
    out = []
    for j in range(len(rays)):
        sub = W.subset(lambda p: p != center and sector_of(rays, center, p) == j)
        G = build_graph(X, sub)
        out.append(find_odd_circuit(G))
    return out


# ---------------------------------------------------------------- summary

def lower_bounds(X: PuncturedRegion, density: int = 4, chromatic_budget: int = CHROMATIC_BUDGET):
    """Certificates computed from the default witness set at ``density``."""
    W = generate_witnesses(X, density)
    G = build_graph(X, W)
    certs = []
    k, c = clique_number(G)
    certs.append(c)
    odd = find_odd_circuit(G)
    if odd is not None:
        certs.append(odd)
    if G.n <= chromatic_budget:
        certs.append(chromatic_number(G, chromatic_budget)[1])
    return {"witnesses": W, "graph": G, "certificates": certs}


def best_bound(certs: Sequence[Certificate]) -> dict:
    out = {"alpha": 1, "beta": 1, "gamma": 1}
    for c in certs:
        for m, v in c.implied().items():
            out[m] = max(out[m], v)
    out["beta"] = max(out["beta"], out["alpha"])
    out["gamma"] = max(out["gamma"], out["beta"])
    return out
