"""Disconnected regions and regions with antennae: at most two cells."""
from __future__ import annotations

from typing import Optional

from .. import geom
from ..cells import AndRule, HalfPlaneRule, NotRule, Piece
from ..errors import CommonSeerFound, InvisibilityTriple, NotAntennaPoint, UnsupportedInput
from ..geom import HalfPlane, Point
from ..invisibility import Certificate, generate_witnesses
from ..region import PuncturedRegion, star
from .base import Decomposition, class_cells, interval_cell


def _inside(P) -> Point:
    v = P.vertices
    n = len(v)
    for i in range(n):
        a, b, c = v[i - 1], v[i], v[(i + 1) % n]
        if geom.orientation(a, b, c) > 0:
            g = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
            if P.contains(g):
                return g
    return v[0]


def _sample(X, P) -> Optional[Point]:
    g = _inside(P)
    return g if X.contains(g) else next((w for w in generate_witnesses(X, 2)
                                          if P.contains(w)), None)


def theorem_A(X: PuncturedRegion, a: Point = None, b: Point = None, density: int = 3) -> Decomposition:
    """Two cells st(a) and st(b) when no point of X sees both a and b.  By
    default a and b are sample points of the two polygon components."""
    comps = X.components
    if a is None or b is None:
        if len(comps) < 2:
            raise CommonSeerFound("S is connected; no separated pair to start from")
        a, b = _sample(X, comps[0]), _sample(X, comps[1])
    if not (X.contains(a) and X.contains(b)):
        raise UnsupportedInput("a and b must lie in X")
    for w in generate_witnesses(X, density):
        if X.sees(w, a) and X.sees(w, b):
            raise CommonSeerFound("witness %r sees both points" % (w,), w)
    if len(comps) != 2:
        raise UnsupportedInput("the two-cell construction needs exactly two polygon components")
    for s in X.antennae:
        line = geom.line_through(s.a, s.b)
        rest = X.line_set(line) & s.param_set()
        for P in comps:
            rest = rest - geom.polygon_line_set(P, line)
        if rest:
            raise UnsupportedInput("points of an antenna remain in X")
    cells = [star(X, a), star(X, b)]
    for w in generate_witnesses(X, density):
        if not any(c.contains(w) for c in cells):
            pts = [a, b, w]
            if all(not X.sees(p, q) for i, p in enumerate(pts) for q in pts[i + 1:]):
                raise InvisibilityTriple("%r lies in neither star" % (w,),
                                         certificate=Certificate("clique", tuple(pts), "alpha", 3))
            raise UnsupportedInput("the two stars miss %r" % (w,))
    return Decomposition(cells, "A", 2)


def _off_line(line):
    h = HalfPlane.left_of(line.origin, line.origin + line.direction)
    return NotRule(AndRule((HalfPlaneRule(h), HalfPlaneRule(h.complement().closure()))))


def theorem_B(X: PuncturedRegion, p: Point = None) -> Decomposition:
    """Two cells: the component of p on the antenna line, and the hull of
    everything else."""
    if not X.antennae:
        raise NotAntennaPoint("X has no antenna")
    if p is None:
        s = X.antennae[0]
        p = geom.midpoint(s.a, s.b)
    ant = next((s for s in X.antennae if s.contains(p)), None)
    if ant is None or X.is_two_dimensional_at(p):
        raise NotAntennaPoint("S is two-dimensional at %r" % (p,))
    line = geom.line_through(ant.a, ant.b)
    t = line.param(p)
    parts = list(X.line_set(line))
    comps = [interval_cell(line, iv, "L%d" % k) for k, iv in enumerate(parts)]
    rule = _off_line(line)
    C = [Piece(P.vertices, X, [rule], "C%d" % k) for k, P in enumerate(X.components)]
    if len(X.antennae) > 1:
        raise UnsupportedInput("more than one antenna")
    if not C:
        if len(comps) > 2:
            pts = [c.sample_points()[0] for c in comps[:3]]
            from .theorem_e import _triple
            raise _triple(pts, "three components on the antenna line")
        return Decomposition(comps, "B", 2)
    k = next((k for k, iv in enumerate(parts) if t in iv), None)
    A = [comps[k]] if k is not None else []
    B = [c for j, c in enumerate(comps) if j != k]
    classes = ([A] if A else []) + [B + C]
    return Decomposition(class_cells(classes, X, (["A"] if A else []) + ["B+C"]), "B", 2)
