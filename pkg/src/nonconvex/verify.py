"""Independent checks for decompositions and certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import geom
from .cells import ConvexCell, UNIT
from .geom import Point
from .region import PuncturedRegion


@dataclass
class Report:
    ok: bool = True
    violations: list = field(default_factory=list)

    def fail(self, kind: str, detail: str, point=None):
        self.ok = False
        self.violations.append({"kind": kind, "detail": detail, "point": point})

    def merge(self, other: "Report", prefix: str = ""):
        for v in other.violations:
            self.fail(v["kind"], prefix + v["detail"], v["point"])

    def __bool__(self):
        return self.ok


def _base_in_S(cell: ConvexCell, X: PuncturedRegion) -> bool:
    b = cell.base
    if len(b) == 1:
        return X.in_S(b[0])
    if len(b) == 2:
        return X.S_on_line(geom.line_through(b[0], b[1])).covers(UNIT)
    for P in X.components:
        if all(geom.polygon_line_set(P, geom.line_through(p, q)).covers(UNIT)
               for p, q in cell.edges()):
            return True
    return False


def _feature_hits(cell: ConvexCell, X: PuncturedRegion) -> list:
    hits = []
    for f in X.features:
        s = f.segment
        line = geom.line_through(s.a, s.b) if not f.is_point else geom.Line(s.a, Point(1, 0))
        common = cell.line_set(line) & f.on_line(line)
        if common:
            iv = common.intervals[0]
            t = iv.lo if iv.lo_closed else iv.midpoint()
            if iv.lo is None:
                t = iv.midpoint()
            hits.append(line.at(t))
    return hits


def cell_in_X(cell: ConvexCell, X: PuncturedRegion) -> bool:
    return _base_in_S(cell, X) and not _feature_hits(cell, X)


def verify_cell(cell: ConvexCell, X: PuncturedRegion) -> Report:
    r = Report()
    if cell.is_empty():
        r.fail("empty", "cell %s is empty" % cell.label)
    for a, b, kept in cell.convexity_violations():
        r.fail("convexity", "edge %r-%r retains %r" % (a, b, kept), a)
    if not cell.exclusions_on_boundary():
        r.fail("representation", "an exclusion is not on the cell boundary")
    if not _base_in_S(cell, X):
        r.fail("containment", "base of %s leaves S" % cell.label, cell.base[0])
    for p in _feature_hits(cell, X):
        r.fail("containment", "cell %s meets a missing feature" % cell.label, p)
    return r


# ---------------------------------------------------------------- areas

def union_area(hulls: Sequence[tuple]) -> Fraction:
    """Area of a union of closed convex polygons by inclusion-exclusion."""
    hulls = [h for h in hulls if len(h) >= 3]
    total = Fraction(0)

    def rec(start, current, depth):
        nonlocal total
        for j in range(start, len(hulls)):
            inter = hulls[j] if current is None else geom.convex_intersection(current, hulls[j])
            if len(inter) < 3:
                continue
            a = geom.convex_area(inter)
            total += a if depth % 2 == 0 else -a
            rec(j + 1, inter, depth + 1)

    rec(0, None, 0)
    return total


def verify_cover(cells: Sequence[ConvexCell], X: PuncturedRegion, W, area: bool = True) -> Report:
    """Every witness lies in some cell and (with ``area``) the closures
    cover S up to measure zero."""
    r = Report()
    pts = W.points if hasattr(W, "points") else W
    for p in pts:
        if not any(c.contains(p) for c in cells):
            r.fail("uncovered", "witness not covered", p)
    if area:
        got = union_area([c.base for c in cells])
        if got != X.area:
            r.fail("area", "union of closures has area %s, S has %s" % (got, X.area))
    return r


def verify_decomposition(dec, X: PuncturedRegion, W=None) -> Report:
    from .invisibility import generate_witnesses

    r = Report()
    if len(dec.cells) > dec.claimed_bound:
        r.fail("bound", "%d cells exceed the claimed bound %d" % (len(dec.cells), dec.claimed_bound))
    for i, c in enumerate(dec.cells):
        r.merge(verify_cell(c, X), "cell %d: " % i)
    if W is None:
        W = generate_witnesses(X, 3)
    # witness-only covers make no claim about the rest of X
    r.merge(verify_cover(dec.cells, X, W, area=dec.route != "MT3"))
    return r


# ---------------------------------------------------------------- certificates

def replay_certificate(c, X: PuncturedRegion) -> bool:
    from . import invisibility as inv

    pts = list(c.points)
    if any(not X.contains(p) for p in pts) and c.kind != "sector_counting":
        return False
    if c.kind == "clique":
        if len(pts) != c.value or len(set(pts)) != len(pts):
            return False
        return all(not X.sees(p, q) for i, p in enumerate(pts) for q in pts[i + 1:])
    if c.kind == "odd_circuit":
        n = len(pts)
        if n % 2 == 0 or n < 3 or len(set(pts)) != n or c.value > 3:
            return False
        return all(not X.sees(pts[i], pts[(i + 1) % n]) for i in range(n))
    if c.kind == "chromatic":
        G = inv.build_graph(X, inv.witness_set(pts))
        if c.value <= 1:
            return True
        return inv._colorable(G, c.value - 1) is None
    if c.kind == "convex_partition_infeasible":
        if c.value <= 1:
            return c.value <= len(pts)
        return inv.partition_classes(X, pts, c.value - 1) is None
    if c.kind == "sector_counting":
        d = c.data
        center = pts[0]
        rays = list(d["rays"])
        if X.contains(center) or d["sectors"] != len(rays):
            return False
        if inv.max_sectors_per_convex_set(rays) != d["max_sectors"]:
            return False
        subs = d.get("sector_certificates") or ()
        if len(subs) != len(rays):
            return False
        for j, sc in enumerate(subs):
            if sc is None or inv._sector_cert_value(sc) < d["per_sector_lb"]:
                return False
            if any(inv.sector_of(rays, center, p) != j for p in sc.points):
                return False
            if not replay_certificate(sc, X):
                return False
        return c.value == -(-len(rays) * d["per_sector_lb"] // d["max_sectors"])
    return False
