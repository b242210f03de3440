"""Two or more interior missing points: at most three cells.

The interior features lie on one line L.  The open sides X_+ and X_- of X
are convex, and the components of X on L are attached to them.  Candidate
groupings are tried from two cells up, and each is checked exactly."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .. import geom
from ..cells import ExcludeSegments, HalfPlaneRule, Piece
from ..errors import AlphaRefuted, ColoringConflict, NonConvexUnion, PreconditionViolated
from ..geom import HalfPlane, Segment
from ..region import PuncturedRegion
from ..invisibility import generate_witnesses
from ..verify import verify_cover
from .base import Decomposition, class_cells, interval_cell
from .theorem_e import _check_triple, _triple


def _line_clique(X: PuncturedRegion, a, b):
    """Three pairwise invisible points on the line ab, when X meets it in at
    least three pieces."""
    line = geom.line_through(a, b)
    pieces = [iv for iv in X.line_set(line)]
    if len(pieces) < 3:
        return None
    pts = [line.at(iv.lo if iv.is_point else iv.midpoint()) for iv in pieces[:3]]
    return _triple(pts, "three pieces of X on one line") if _check_triple(X, pts) else None


def _refute(X, pairs, why):
    for a, b in pairs:
        if a != b:
            e = _line_clique(X, a, b)
            if e is not None:
                raise e
    raise AlphaRefuted(why)


def _probe_points(f):
    s = f.segment
    return [s.a] if f.is_point else [geom.lerp(s.a, s.b, Fraction(1, 3)),
                                     geom.lerp(s.a, s.b, Fraction(2, 3))]


def _interior_line(X: PuncturedRegion):
    segs = [f for f in X.M_i if not f.is_point]
    if not segs:
        if len(X.M_i) >= 2:
            _refute(X, [(X.M_i[0].at, X.M_i[1].at)], "two isolated interior missing points")
        raise PreconditionViolated("M_i must contain at least two points")
    s = segs[0].segment
    line = geom.line_through(s.a, s.b)
    for f in X.M_i:
        if any(not line.contains(e) for e in f.endpoints):
            pairs = [(u, v) for u in _probe_points(segs[0]) for v in _probe_points(f)]
            _refute(X, pairs, "interior missing points off one line")
    return line, s


def _side(X, line, s, left):
    a, b = (s.a, s.b) if left else (s.b, s.a)
    h = HalfPlane.left_of(a, b)
    parts = geom.clip(X.S, h)
    if len(parts) != 1 or not parts[0].is_convex():
        raise AlphaRefuted("an open side of the interior segment line is not convex")
    P = parts[0]
    piece = Piece(P.vertices, X, [HalfPlaneRule(HalfPlane.left_of(a, b, closed=False))],
                  "X+" if left else "X-")
    return P, piece


def _edge_at(P, c, line):
    v = list(P.vertices)
    if c not in v:
        return None
    k = v.index(c)
    for w in (v[k - 1], v[(k + 1) % len(v)]):
        if not line.contains(w):
            return Segment(c, w)
    return None


def theorem_C(X: PuncturedRegion) -> Decomposition:
    if len(X.components) != 1:
        raise PreconditionViolated("S must be connected")
    line, I = _interior_line(X)
    Sp, Xp = _side(X, line, I, True)
    Sm, Xm = _side(X, line, I, False)
    on = list(X.line_set(line))
    comps = [interval_cell(line, iv, "L%d" % (k + 1)) for k, iv in enumerate(on)]
    if len(comps) > 2:
        pts = [c.sample_points()[0] for c in comps[:3]]
        if _check_triple(X, pts):
            raise _triple(pts, "three components of X on the interior segment line")
        raise ColoringConflict("three components on the interior line", [c.label for c in comps])

    cands = []
    # two cells: every assignment of the line components to the two sides
    for assign in itertools.product((0, 1), repeat=len(comps)):
        groups = [[Xp], [Xm]]
        for c, a in zip(comps, assign):
            groups[a].append(c)
        cands.append(("two", groups))
    # three cells
    if len(comps) == 1:
        cands.append(("three", [[Xp], [Xm], comps]))
    if len(comps) == 2:
        for i, j in ((0, 1), (1, 0)):
            cands.append(("three", [[comps[i], Xp], [Xm], [comps[j]]]))
            cands.append(("three", [[Xp], [comps[i], Xm], [comps[j]]]))
        for S_side, X_side, other, sign in ((Sp, Xp, Xm, "+"), (Sm, Xm, Xp, "-")):
            ends = []
            for k, iv in enumerate(on):
                t = iv.lo if k == 0 else iv.hi
                closed = iv.lo_closed if k == 0 else iv.hi_closed
                ends.append(_edge_at(S_side, line.at(t), line) if t is not None and closed else None)
            if None in ends:
                continue
            if ends[0].b == ends[1].b and X.contains(ends[0].b):
                continue
            pieces = [Piece(X_side.base, X, list(X_side.rules) + [ExcludeSegments((e,))],
                            "%s-C%d" % (X_side.label, k + 1)) for k, e in enumerate(ends)]
            cands.append(("edges" + sign, [[other], [pieces[0], comps[0]], [pieces[1], comps[1]]]))
    errors = []
    for kind, groups in cands:
        try:
            cells = class_cells(groups, X)
        except (ColoringConflict, NonConvexUnion) as e:
            errors.append(str(e))
            continue
        if kind.startswith("edges"):
            if not verify_cover(cells, X, generate_witnesses(X, 2)).ok:
                continue
        return Decomposition(cells, "C/%s" % kind, 3, None, ["%d line components" % len(comps)])
    raise ColoringConflict("no candidate grouping is convex: %s" % errors[:2],
                           [c.label for c in comps])
