"""Convex cells: a closed convex polygon (or segment, or point) minus
parts of its relative boundary.

A cell is convex exactly when, on every edge of its base, the retained part
of the edge is a single interval (possibly empty or a point); this is the
check performed by :meth:`ConvexCell.is_convex`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import geom
from .errors import NonConvexUnion
from .geom import HalfPlane, Line, Point, Segment
from .intervals import Interval, IntervalSet

UNIT = IntervalSet.closed(0, 1)


class Rule:
    """A point set restricting a cell: ``contains`` and ``on_line``."""

    def contains(self, p: Point) -> bool:
        raise NotImplementedError

    def on_line(self, line: Line) -> IntervalSet:
        raise NotImplementedError


@dataclass(frozen=True)
class HalfPlaneRule(Rule):
    h: HalfPlane

    def contains(self, p):
        return self.h.contains(p)

    def on_line(self, line):
        return geom.halfplane_line_set(self.h, line)


@dataclass(frozen=True)
class HalfOpenPlane(Rule):
    """Open half-plane left of the directed line (center, direction) together
    with the open ray from ``center`` along ``direction``.  Two of these with
    opposite directions partition the plane minus ``center``."""

    center: Point
    direction: Point

    def contains(self, p):
        c = geom.cross(self.direction, p - self.center)
        if c != 0:
            return c > 0
        return geom.dot(self.direction, p - self.center) > 0

    def on_line(self, line):
        h = HalfPlane.left_of(self.center, self.center + self.direction, closed=False)
        out = geom.halfplane_line_set(h, line)
        base = Line(self.center, self.direction)
        if base.same_line(line):
            t0 = line.param(self.center)
            if geom.dot(line.direction, self.direction) > 0:
                out = out | IntervalSet([Interval(t0, None, False, False)])
            else:
                out = out | IntervalSet([Interval(None, t0, False, False)])
        elif geom.cross(line.direction, self.direction) != 0:
            # the crossing point with the base line, when it is on the open ray
            d = self.direction
            t = geom.cross(d, self.center - line.origin) / geom.cross(d, line.direction)
            x = line.at(t)
            if geom.dot(x - self.center, d) > 0:
                out = out | IntervalSet.point(t)
        return out

    def opposite(self) -> "HalfOpenPlane":
        return HalfOpenPlane(self.center, Point(-self.direction.x, -self.direction.y))

    def closure(self) -> HalfPlane:
        return HalfPlane.left_of(self.center, self.center + self.direction)


@dataclass(frozen=True)
class ExcludePoints(Rule):
    points: tuple

    def contains(self, p):
        return p not in self.points

    def on_line(self, line):
        out = IntervalSet.line()
        for p in self.points:
            if line.contains(p):
                out = out - IntervalSet.point(line.param(p))
        return out


@dataclass(frozen=True)
class ExcludeSegments(Rule):
    segments: tuple

    def contains(self, p):
        return not any(s.contains(p) for s in self.segments)

    def on_line(self, line):
        out = IntervalSet.line()
        for s in self.segments:
            out = out - geom.segment_set_on_line(s, line)
        return out


@dataclass(frozen=True)
class NotRule(Rule):
    rule: Rule

    def contains(self, p):
        return not self.rule.contains(p)

    def on_line(self, line):
        return self.rule.on_line(line).complement()


@dataclass(frozen=True)
class AndRule(Rule):
    rules: tuple

    def contains(self, p):
        return all(r.contains(p) for r in self.rules)

    def on_line(self, line):
        out = IntervalSet.line()
        for r in self.rules:
            out = out & r.on_line(line)
        return out


class Piece:
    """The points of X inside a closed convex base that satisfy every rule.

    Unlike :class:`ConvexCell` a piece need not be convex on its boundary;
    its interior is assumed to lie in X.  Pieces feed :func:`hull_cell`."""

    def __init__(self, base, X, rules=(), label=""):
        self.base = tuple(base)
        self.X = X
        self.rules = tuple(rules)
        self.label = label

    def closure_on_line(self, line):
        return ConvexCell(self.base).closure_on_line(line)

    def line_set(self, line):
        s = self.closure_on_line(line)
        if not s:
            return s
        s = s & self.X.line_set(line)
        for r in self.rules:
            s = s & r.on_line(line)
        return s

    def contains(self, p):
        return (geom.in_convex(p, self.base) and self.X.contains(p)
                and all(r.contains(p) for r in self.rules))

    def is_empty(self):
        if len(self.base) >= 3:
            return False
        if len(self.base) == 1:
            return not self.contains(self.base[0])
        return not self.line_set(geom.line_through(*self.base))

    def __repr__(self):
        return "Piece(%s)" % (self.label or self.base,)


def _closure_name(lo_closed, hi_closed):
    return {(True, True): "closed", (False, False): "open",
            (False, True): "half_open_a", (True, False): "half_open_b"}[(lo_closed, hi_closed)]


@dataclass(frozen=True)
class ConvexCell:
    base: tuple
    exclusions: tuple = ()
    label: str = field(default="", compare=False)

    # ------------------------------------------------------------ geometry
    @property
    def dim(self) -> int:
        return geom.affine_dim(self.base)

    def edges(self):
        b = self.base
        if len(b) < 3:
            return [(b[0], b[-1])] if len(b) == 2 else []
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    @property
    def area(self) -> Fraction:
        return geom.convex_area(self.base)

    def excluded_on_line(self, line: Line) -> IntervalSet:
        out = IntervalSet()
        for s in self.exclusions:
            out = out | geom.segment_set_on_line(s, line)
        return out

    def closure_on_line(self, line: Line) -> IntervalSet:
        b = self.base
        if len(b) >= 3:
            return geom.ring_line_set(b, line)
        if len(b) == 2:
            return geom.segment_set_on_line(Segment(b[0], b[1]), line)
        return IntervalSet.point(line.param(b[0])) if line.contains(b[0]) else IntervalSet()

    def line_set(self, line: Line) -> IntervalSet:
        return self.closure_on_line(line) - self.excluded_on_line(line)

    def retained(self, a: Point, b: Point) -> IntervalSet:
        """Retained part of the base edge [a, b], in parameters of a -> b."""
        line = geom.line_through(a, b)
        return UNIT - self.excluded_on_line(line)

    def contains(self, p: Point) -> bool:
        return geom.in_convex(p, self.base) and not any(s.contains(p) for s in self.exclusions)

    __contains__ = contains

    def is_empty(self) -> bool:
        if len(self.base) >= 3:
            return False
        if len(self.base) == 1:
            return not self.contains(self.base[0])
        return not self.retained(*self.base)

    def convexity_violations(self) -> list:
        out = []
        for a, b in self.edges():
            r = self.retained(a, b)
            if not r.is_convex():
                out.append((a, b, r))
        return out

    def is_convex(self) -> bool:
        return not self.convexity_violations() and not self.is_empty()

    def exclusions_on_boundary(self) -> bool:
        for s in self.exclusions:
            if not any(geom.on_closed_segment(s.a, a, b) and geom.on_closed_segment(s.b, a, b)
                       for a, b in self.edges()) and not (len(self.base) == 1 and s.a == self.base[0]):
                return False
        return True

    def sample_points(self) -> list:
        """Deterministic points of the cell: retained vertices, midpoints of
        retained edge pieces and the centroid."""
        pts = []
        for a, b in self.edges():
            line = geom.line_through(a, b)
            for iv in self.retained(a, b):
                pts.append(line.at(iv.lo) if iv.lo_closed else line.at(iv.midpoint()))
                pts.append(line.at(iv.midpoint()))
        if len(self.base) == 1 and self.contains(self.base[0]):
            pts.append(self.base[0])
        if len(self.base) >= 3:
            n = len(self.base)
            pts.append(Point(sum(p.x for p in self.base) / n, sum(p.y for p in self.base) / n))
        return list(dict.fromkeys(p for p in pts if self.contains(p)))


# ---------------------------------------------------------------- builders

def _exclusions_for(base: tuple, keep) -> tuple:
    """Exclusions so that the retained part of each base edge is ``keep``."""
    out = []
    if len(base) == 1:
        return ()
    edges = [(base[0], base[1])] if len(base) == 2 else [
        (base[i], base[(i + 1) % len(base)]) for i in range(len(base))]
    for a, b in edges:
        line = geom.line_through(a, b)
        gone = UNIT - keep(line)
        for iv in gone:
            if iv.is_point:
                p = line.at(iv.lo)
                out.append(Segment(p, p))
            else:
                out.append(Segment(line.at(iv.lo), line.at(iv.hi),
                                   _closure_name(iv.lo_closed, iv.hi_closed)))
    return tuple(dict.fromkeys(out))


def make_cell(points: Iterable[Point], X, rules: Sequence[Rule] = (), label: str = "",
              check: bool = True) -> Optional[ConvexCell]:
    """Cell with base conv(points), keeping on the relative boundary exactly
    the points of X that satisfy every rule.  Returns None when empty; raises
    :class:`NonConvexUnion` if the result is not convex."""
    base = geom.convex_hull(points)
    if not base:
        return None

    def keep(line):
        s = X.line_set(line)
        for r in rules:
            s = s & r.on_line(line)
        return s

    if len(base) == 1:
        p = base[0]
        if not (X.contains(p) and all(r.contains(p) for r in rules)):
            return None
        return ConvexCell(base, (), label)
    cell = ConvexCell(base, _exclusions_for(base, keep), label)
    if cell.is_empty():
        return None
    if check and cell.convexity_violations():
        raise NonConvexUnion("cell %s is not convex" % (label or base,))
    return cell


def hull_cell(pieces: Sequence[ConvexCell], label: str = "",
              extra_points: Sequence[Point] = ()) -> ConvexCell:
    """Convex hull of a union of convex cells (and extra points)."""
    pts = [p for c in pieces for p in c.base] + list(extra_points)
    base = geom.convex_hull(pts)
    if len(base) == 1:
        return ConvexCell(base, (), label)

    def keep(line):
        s = IntervalSet()
        for c in pieces:
            s = s | c.line_set(line)
        for p in extra_points:
            if line.contains(p):
                s = s | IntervalSet.point(line.param(p))
        return (s & UNIT).hull()

    return ConvexCell(base, _exclusions_for(base, keep), label)


def cell_from_halfplanes(S_points: Sequence[Point], X, halfplanes: Sequence,
                         label: str = "") -> Optional[ConvexCell]:
    """conv(S_points) clipped by the closures of the given rules that have a
    ``closure`` (half-planes), restricted to X and the rules on the boundary."""
    base = tuple(geom.convex_hull(S_points))
    for r in halfplanes:
        h = r.h if isinstance(r, HalfPlaneRule) else r.closure()
        base = geom.clip_convex(base, h)
        if not base:
            return None
    return make_cell(base, X, halfplanes, label)
