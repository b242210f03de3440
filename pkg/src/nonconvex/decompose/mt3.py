"""Two-colorable witness sets around a single interior missing point."""
from __future__ import annotations

from typing import Optional, Sequence

from .. import geom
from ..cells import ExcludePoints, HalfOpenPlane, cell_from_halfplanes, make_cell
from ..errors import ColoringConflict, PreconditionViolated, RayPropertyViolated
from ..geom import Point
from ..invisibility import build_graph, witness_set, _colorable
from ..region import PuncturedRegion
from ..verify import verify_cell, verify_cover
from .base import Decomposition, choose_split_direction


def two_coloring_of(X: PuncturedRegion, W: Sequence[Point]) -> Optional[list]:
    """Split W into two classes of pairwise visible points, or None."""
    G = build_graph(X, witness_set(W))
    col = _colorable(G, 2)
    if col is None:
        return None
    pts = G.witness.points
    return [[q for q, c in zip(pts, col) if c == k] for k in (0, 1)]


def _where(p: Point, hull: tuple) -> str:
    if not geom.in_convex(p, hull):
        return "out"
    if p in hull:
        return "vertex"
    return "in"


def _the_point(X: PuncturedRegion) -> Point:
    if len(X.M_i) == 1 and X.M_i[0].is_point:
        return X.M_i[0].at
    if not X.M_i and len(X.M_b) == 1 and X.M_b[0].is_point:
        return X.M_b[0].at
    raise PreconditionViolated("exactly one missing point expected")


def main_theorem_3(X: PuncturedRegion, two_coloring=None, witnesses=None) -> Decomposition:
    """At most four cells covering the witnesses, given two classes of
    pairwise visible witnesses around the single missing point p such that
    every witness x has (p, x] inside X.  Without ``two_coloring`` the
    classes are computed from ``witnesses``."""
    p = _the_point(X)
    if two_coloring is None:
        if witnesses is None:
            raise PreconditionViolated("need a two-coloring or a witness set")
        classes = two_coloring_of(X, witnesses)
        if classes is None:
            raise PreconditionViolated("witness set is not 2-colorable")
    else:
        classes = two_coloring
    classes = [list(dict.fromkeys(c)) for c in classes if c]
    if len(classes) > 2:
        raise PreconditionViolated("at most two classes expected")
    W = [x for c in classes for x in c]
    for x in W:
        if x == p or not X.contains(x) or not X.sees(p, x):
            raise RayPropertyViolated("ray (p, x] leaves X at x = %s" % (x,), point=x)
    d = choose_split_direction(X, p, avoid=W)
    halves = (HalfOpenPlane(p, d), HalfOpenPlane(p, Point(-d.x, -d.y)))
    cells = []
    for k, cls in enumerate(classes):
        hull = geom.convex_hull(list(cls) + [p])
        where = _where(p, hull)
        if where == "out":
            parts = [make_cell(hull, X, label="c%d" % k)]
        elif where == "vertex":
            parts = [make_cell(hull, X, [ExcludePoints((p,))], label="c%d" % k)]
        else:
            parts = [cell_from_halfplanes(hull, X, [T], label="c%d%s" % (k, s))
                     for T, s in zip(halves, "+-")]
        for c in parts:
            if c is None:
                continue
            rep = verify_cell(c, X)
            if not rep.ok:
                raise ColoringConflict("class %d hull leaves X: %s" % (k, rep.violations[0]),
                                       pieces=[c.label])
            cells.append(c)
    rep = verify_cover(cells, X, witness_set(W), area=False)
    if not rep.ok:
        raise ColoringConflict("witnesses not covered: %s" % (rep.violations[0],), pieces=[])
    return Decomposition(cells, "MT3", 4, notes=["split direction %s" % (d,)])
