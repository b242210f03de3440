"""Regions with no interior punctures: at most three convex cells.

The closed set S is analysed first (lnc points, kernel, leaves); the region
is then cut into structural pieces which are 3-colored so that every color
class is a seeing subset.  Each class becomes the convex hull cell of its
pieces and is checked exactly before it is returned.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .. import geom
from ..cells import (AndRule, ConvexCell, ExcludePoints, ExcludeSegments, HalfPlaneRule,
                     NotRule, Piece, hull_cell)
from ..errors import (ColoringConflict, InvisibilityTriple, MissingInteriorFeature,
                      NonConvexLeaf, NonConvexUnion, PreconditionViolated)
from ..geom import HalfPlane, Line, Point, Segment
from ..intervals import IntervalSet
from ..invisibility import Certificate
from ..region import PuncturedRegion
from ..structure import analyze
from ..verify import verify_cell
from .base import (Coloring, Decomposition, LeafPartition, class_cells, interval_cell,
                   open_interior)

UNIT = IntervalSet.closed(0, 1)


def _triple(points, why):
    cert = Certificate("clique", tuple(points), "alpha", 3, {"reason": why})
    return InvisibilityTriple(why, cert)


def _check_triple(X, pts):
    pts = list(dict.fromkeys(pts))
    if len(pts) == 3 and all(not X.sees(a, b) for i, a in enumerate(pts) for b in pts[i + 1:]):
        return True
    return False


# ---------------------------------------------------------------- entry point

def theorem_E(X: PuncturedRegion) -> Decomposition:
    if X.M_i:
        raise MissingInteriorFeature("X has interior missing points")
    if X.antennae:
        raise PreconditionViolated("S is not two-dimensional (antenna present)")
    if len(X.components) > 1:
        if len(X.components) > 2:
            pts = [_interior_sample(P) for P in X.components[:3]]
            raise _triple(pts, "three components of X")
        from .theorem_ab import theorem_A
        dec = theorem_A(X)
        dec.case_tag = "E/disconnected"
        dec.claimed_bound = 3
        return dec
    st = analyze(X.S)
    if st.lobes and len(st.kernel) <= 1:
        return _pinch(X, st)
    if st.n == 0:
        return _convex(X)
    if st.kernel_dim == 1:
        return _segment_kernel(X, st)
    if st.kernel_dim != 2:
        raise NonConvexLeaf("kernel of S is a point but S has no pinch")
    return LeafPipeline(X, st).run()


def _interior_sample(P) -> Point:
    v = P.vertices
    for i in range(len(v)):
        a, b, c = v[i - 1], v[i], v[(i + 1) % len(v)]
        if geom.orientation(a, b, c) > 0:
            g = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
            if P.contains(g):
                return g
    return v[0]


# ---------------------------------------------------------------- dim K = 0

def _pinch(X, st) -> Decomposition:
    q = st.Q[0]
    A, B = st.lobes
    pieces = [Piece(L.vertices, X, [ExcludePoints((q,))], "lobe%d" % k)
              for k, L in enumerate((A, B))]
    cells = class_cells([[p] for p in pieces], X, ["lobe0", "lobe1"])
    notes = []
    if X.contains(q):
        for k in (0, 1):
            c = hull_cell([pieces[k]], "lobe%d" % k, extra_points=[q])
            if verify_cell(c, X).ok:
                cells[k] = c
                notes.append("pinch point joined lobe %d" % k)
                break
        else:
            a = _sample_invisible(X, q, pieces[0])
            b = _sample_invisible(X, q, pieces[1])
            if a and b and _check_triple(X, [q, a, b]):
                raise _triple([q, a, b], "pinch point sees neither lobe")
            raise ColoringConflict("pinch point cannot join either lobe", ["lobe0", "lobe1"])
    return Decomposition(cells, "E/dimK=0", 3, None, notes)


def _sample_invisible(X, q, piece) -> Optional[Point]:
    for line, inv in _invisible_lines(X, q, X.critical_points):
        s = piece.line_set(line) & inv
        if s:
            iv = s.intervals[0]
            return line.at(iv.lo if iv.lo_closed else iv.midpoint())
    return None


# ---------------------------------------------------------------- dim K = 1

def _segment_kernel(X, st) -> Decomposition:
    u, w = st.kernel[0], st.kernel[1]
    L = geom.line_through(u, w)
    A, B = st.lobes
    PA = Piece(A.vertices, X, [HalfPlaneRule(HalfPlane.left_of(u, w, closed=False))], "A")
    PB = Piece(B.vertices, X, [HalfPlaneRule(HalfPlane.left_of(w, u, closed=False))], "B")
    comps = [interval_cell(L, iv, "D%d" % k) for k, iv in enumerate(X.line_set(L))]
    if len(comps) <= 1:
        classes = [[PA], [PB]] + ([comps] if comps else [])
        return Decomposition(class_cells(classes, X, ["A", "B", "D"]), "E/dimK=1", 3)
    if len(comps) > 2:
        pts = [c.sample_points()[0] for c in comps[:3]]
        raise _triple(pts, "X meets the kernel line in three components")
    mid = L.param(geom.midpoint(u, w))
    d1 = next((k for k, iv in enumerate(X.line_set(L)) if mid in iv), 0)
    D1, D2 = comps[d1], comps[1 - d1]
    d2_in_A = geom.in_convex(D2.sample_points()[0], A.vertices)
    order = [(PB, PA), (PA, PB)] if d2_in_A else [(PA, PB), (PB, PA)]
    for P1, P2 in order:
        try:
            cells = class_cells([[P1, D1], [P2, D2]], X, ["%s+D1" % P1.label, "%s+D2" % P2.label])
            return Decomposition(cells, "E/dimK=1", 3, None, ["D split"])
        except ColoringConflict:
            continue
    raise ColoringConflict("no attachment of the kernel-line components works", ["D1", "D2"])


# ---------------------------------------------------------------- n = 0

def boundary_components(X, verts):
    """Components of X on the boundary of a convex polygon, in ring order.

    Each component is a list of (edge index, line, interval)."""
    n = len(verts)
    parts = []
    for k in range(n):
        a, b = verts[k], verts[(k + 1) % n]
        line = geom.line_through(a, b)
        for iv in X.line_set(line) & UNIT:
            parts.append((k, line, iv))
    if not parts:
        return [], False
    comps = [[parts[0]]]
    for prev, cur in zip(parts, parts[1:]):
        if prev[2].hi == 1 and prev[2].hi_closed and cur[2].lo == 0 and cur[2].lo_closed \
                and cur[0] == prev[0] + 1:
            comps[-1].append(cur)
        else:
            comps.append([cur])
    first, last = parts[0], parts[-1]
    wrap = (last[0] == n - 1 and first[0] == 0 and last[2].hi == 1 and last[2].hi_closed
            and first[2].lo == 0 and first[2].lo_closed)
    if wrap and len(comps) > 1:
        comps[0] = comps.pop() + comps[0]
    full = wrap and len(comps) == 1 and all(
        any(p[0] == k and p[2].lo == 0 and p[2].hi == 1 for p in parts) for k in range(n))
    if len(comps) == 1 and not full and len(comps[0]) > 2 and comps[0][0][0] == comps[0][-1][0]:
        # one component wrapping around a gap: split it after the next full edge
        c = comps[0]
        comps = [c[:2], c[2:]]
    return comps, full


def _on_edge(comp, k, n):
    """Parameters on edge k (of an n-gon) covered by a component."""
    out = IntervalSet()
    for j, _, iv in comp:
        if j == k:
            out = out | IntervalSet([iv])
        elif j == (k - 1) % n and iv.hi == 1 and iv.hi_closed:
            out = out | IntervalSet.point(0)
        elif j == (k + 1) % n and iv.lo == 0 and iv.lo_closed:
            out = out | IntervalSet.point(1)
    return out


def boundary_conflict(a, b, n) -> bool:
    """True if some point of a fails to see some point of b along an edge."""
    for k in range(n):
        sa, sb = _on_edge(a, k, n), _on_edge(b, k, n)
        if sa and sb and not (sa | sb).is_convex():
            return True
    return False


def _comp_cells(comp, label):
    return [interval_cell(line, iv, label) for _, line, iv in comp]


def color_boundary(comps, n) -> list:
    """Greedy colors for a cyclic sequence of boundary components, started
    after a non-conflicting adjacency when there is one."""
    t = len(comps)
    if t == 0:
        return []
    conf = [[i != j and boundary_conflict(comps[i], comps[j], n) for j in range(t)]
            for i in range(t)]
    start = next((j for j in range(t) if not conf[j - 1][j]), 0)
    col = [None] * t
    for k in range(t):
        j = (start + k) % t
        used = {col[i] for i in range(t) if col[i] is not None and conf[i][j]}
        col[j] = min(c for c in range(t + 1) if c not in used)
    return col


def _convex(X) -> Decomposition:
    verts = X.S.vertices
    comps, full = boundary_components(X, verts)
    inner = open_interior(verts, "int S")
    if not comps or full:
        cell = hull_cell([inner] + [c for comp in comps for c in _comp_cells(comp, "bd")], "S")
        return Decomposition([cell], "E/n=0", 3)
    per_edge = {}
    for j, c in enumerate(comps):
        for k, _, _ in c:
            per_edge.setdefault(k, set()).add(j)
    for k, js in per_edge.items():
        if len(js) >= 3:
            pts = [_comp_cells(comps[j], "")[0].sample_points()[0] for j in sorted(js)[:3]]
            raise _triple(pts, "three boundary components on one edge")
    col = color_boundary(comps, len(verts))
    if max(col) > 2:
        raise ColoringConflict("boundary components need more than three colors", [])
    classes = [[inner] for _ in range(3)]
    used = sorted(set(col))
    for j, c in enumerate(comps):
        classes[col[j]].extend(_comp_cells(c, "e%d" % (j + 1)))
    classes = [classes[k] for k in used]
    cells = class_cells(classes, X, ["color%d" % k for k in used])
    coloring = Coloring({"e%d" % (j + 1): col[j] for j in range(len(comps))}, mode="boundary")
    return Decomposition(cells, "E/n=0", 3, coloring)


# ---------------------------------------------------------------- invisibility from a point

def _unit(d):
    m = max(abs(d.x), abs(d.y))
    return Point(d.x / m, d.y / m)


def _probe_directions(q, pts):
    dirs = [z - q for z in pts if z != q]
    dirs = list({_unit(d): d for d in dirs}.values())
    dirs.sort(key=geom.angle_key)
    out = list(dirs)
    for d, e in zip(dirs, dirs[1:] + dirs[:1]):
        if geom.cross(d, e) > 0:
            out.append(d + e)
        elif geom.cross(d, e) < 0 or geom.dot(d, e) < 0:
            out.append(Point(-d.y, d.x))
    return out


def _invisible_lines(X, q, pts):
    """(line, parameter set of points of X on the line not seen from q)."""
    for d in _probe_directions(q, pts):
        line = Line(q, d)
        s = X.line_set(line)
        z = s | IntervalSet.point(0)
        comp = next(iv for iv in z if Fraction(0) in iv)
        inv = s - IntervalSet([comp])
        if inv:
            yield line, inv


# ---------------------------------------------------------------- leaves

def _cut(base, h, single):
    if single:
        return geom.clip_convex(base, h) if base else ()
    polys = []
    for P in base:
        polys.extend(geom.clip(P, h))
    return polys


def _finish(base, single):
    if single:
        return tuple(base)
    if not base:
        return ()
    if len(base) != 1 or not base[0].is_convex():
        raise NonConvexLeaf("a partition cell of the only leaf is not convex")
    return tuple(base[0].vertices)


class LeafPipeline:
    def __init__(self, X: PuncturedRegion, st):
        self.X = X
        self.st = st
        self.n = st.n
        self.Q = st.Q
        self.parts = [self._partition(i) for i in range(self.n)]
        self.kernel = []
        if self.n >= 3:
            self.kernel.append(open_interior(st.convQ, "int convQ"))
        elif self.n == 2:
            q1, q2 = self.Q
            self.kernel.append(ConvexCell(geom.convex_hull([q1, q2]),
                                          (Segment(q1, q1), Segment(q2, q2)), "(q1,q2)"))
        self.kernel.extend(p.F for p in self.parts)

    # -------------------------------------------------------- partition
    def _a_rule(self):
        Q = self.Q
        if self.n == 2:
            return ExcludeSegments((Segment(Q[0], Q[1]),))
        return ExcludePoints(tuple(Q))

    def _side_rule(self, a, b, ref):
        X = self.X
        line = geom.line_through(a, b)
        convex = X.line_set(line).is_convex()
        if convex:
            plus = HalfPlaneRule(HalfPlane.containing(a, b, ref, closed=False))
        else:
            plus = AndRule((HalfPlaneRule(HalfPlane.containing(a, b, ref)),
                            ExcludeSegments((Segment(a, b),))))
        return line, convex, plus, NotRule(plus), HalfPlane.containing(a, b, ref)

    def _partition(self, i) -> LeafPartition:
        X, n = self.X, self.n
        leaves = self.st.leaves
        leaf = leaves[i]
        path = leaf.path
        a, b = leaves[i - 1].last_edge
        c, d = leaves[(i + 1) % n].first_edge
        l_line, l_conv, Lp, Lm, lh = self._side_rule(a, b, path[1])
        m_line, m_conv, Mp, Mm, mh = self._side_rule(c, d, path[-2])
        lmh = lh.complement().closure()
        mmh = mh.complement().closure()
        single = n >= 2
        W = leaf.hull if single else [self.st.S]
        A = self._a_rule()
        cd_base = _finish(_cut(W, lh, single), single)
        rest = _cut(W, lmh, single)
        e_base = _finish(_cut(rest, mh, single), single)
        h_base = _finish(_cut(rest, mmh, single), single)
        CD = Piece(cd_base, X, [A, Lp], "CD%d" % i) if cd_base else None
        E = Piece(e_base, X, [A, Lm, Mp], "E%d" % i) if e_base else None
        H = Piece(h_base, X, [A, Lm, Mm], "H%d" % i) if h_base else None
        G, bad = self._g_components(i, leaf, H)
        F = None
        if H is not None:
            F = Piece(h_base, X, [A, Lm, Mm, ExcludeSegments(tuple(bad))], "F%d" % i)
        return LeafPartition(i, l_line, m_line, l_conv, m_conv, CD, E, H, F, G)

    def _g_components(self, i, leaf, H):
        X = self.X
        Qset = set(self.Q)
        edges = leaf.edges()
        bad = []
        parts = []
        for k, (u, v) in enumerate(edges):
            line = geom.line_through(u, v)
            s = X.line_set(line) & UNIT
            for q in Qset:
                if line.contains(q):
                    s = s - IntervalSet.point(line.param(q))
            if s.is_convex():
                continue
            bad.append(Segment(u, v))
            if H is None:
                continue
            for iv in H.line_set(line) & UNIT:
                parts.append((k, line, iv))
        comps = []
        for part in parts:
            if comps:
                k0, _, iv0 = comps[-1][-1]
                k, _, iv = part
                if k == k0 + 1 and iv0.hi == 1 and iv0.hi_closed and iv.lo == 0 and iv.lo_closed:
                    comps[-1].append(part)
                    continue
            comps.append([part])
        out = [[interval_cell(line, iv, "G%d.%d" % (i, j + 1)) for _, line, iv in comp]
               for j, comp in enumerate(comps)]
        return out, bad

    # -------------------------------------------------------- q invisibility
    def _targets(self):
        out = []
        for p in self.parts:
            if p.CD is not None:
                out.append((p.CD.label, p.index, [p.CD]))
            if p.E is not None:
                out.append((p.E.label, p.index, [p.E]))
            for comp in p.G:
                out.append((comp[0].label, p.index, comp))
            if p.F is not None:
                out.append((p.F.label, p.index, [p.F]))
        for k in self.kernel[:1 if self.n >= 2 else 0]:
            out.append((k.label, None, [k]))
        return out

    def _leaves_near(self, i):
        n = self.n
        return {(i + o) % n for o in (-2, -1, 0, 1)} if n >= 5 else set(range(n))

    def _q_hits(self, i):
        """Pieces containing points of X invisible from q_i."""
        X, q = self.X, self.Q[i]
        near = self._leaves_near(i)
        pts = set(self.Q)
        for j in near:
            pts.update(self.st.leaves[j].path)
        for f in X.features:
            if any(geom.in_convex(e, self.st.leaves[j].hull) for e in f.endpoints for j in near):
                pts.update(f.endpoints)
        targets = [t for t in self._targets() if t[1] is None or t[1] in near]
        hits = {}
        for line, inv in _invisible_lines(X, q, sorted(pts)):
            for label, j, cells in targets:
                if label in hits:
                    continue
                for c in cells:
                    s = c.line_set(line) & inv
                    if s:
                        iv = s.intervals[0]
                        t = iv.lo if iv.lo_closed else iv.midpoint()
                        hits[label] = (j, line.at(t))
                        break
        return hits

    def _offset(self, i, j, point):
        n = self.n
        o = (j - i) % n
        if n == 3 and o == 1:
            a, b = self.Q[i - 1], self.Q[i]
            return -2 if geom.orientation(a, b, point) == 0 else 1
        return {0: 0, n - 1: -1, n - 2: -2, 1: 1}.get(o)

    def _case(self, i, hits):
        if self.n < 3:
            return None, {}
        locs = {}
        for label, (j, pt) in hits.items():
            if j is None or label.startswith("F"):
                continue
            o = self._offset(i, j, pt)
            locs.setdefault(o, pt)
        s = set(locs)
        for bad in ({-1, 0}, {-2, -1}, {0, 1}):
            if bad <= s:
                a, b = (locs[o] for o in sorted(bad))
                if _check_triple(self.X, [self.Q[i], a, b]):
                    raise _triple([self.Q[i], a, b], "lnc point misses two adjacent locations")
        if {-2, 1} <= s:
            return 1, locs
        if {-2, 0} <= s:
            return 2, locs
        if {-1, 1} <= s:
            return 3, locs
        return 0, locs

    # -------------------------------------------------------- coloring
    def schedule(self, r):
        n = self.n
        cCD, cE = {}, {}
        for i in range(n):
            pos = ((i - r) % n) + 1
            cCD[i] = pos % 3
            cE[i] = (pos + 2) % 3
            if n % 3 == 1:
                if pos == n:
                    cCD[i] = 2
                if pos == n - 1:
                    cE[i] = 1
            elif n % 3 == 2 and pos == n:
                cE[i] = 0
        return cCD, cE

    def requirement_violations(self, cCD, cE):
        n = self.n
        out = []
        for i in range(n):
            if cCD[i] == cE[i]:
                out.append(("R1", i))
            if n >= 2:
                j = (i + 1) % n
                if cE[i] == cCD[j] or cCD[i] == cCD[j]:
                    out.append(("R2", i))
        return out

    def _color_g(self, coloring, i, cCD, cE, reverse=False):
        comps = self.parts[i].G[::-1] if reverse else self.parts[i].G
        t = len(comps)
        p, q = cE, cCD
        r = ({0, 1, 2} - {p, q}).pop() if p != q else (q + 1) % 3
        for j, comp in enumerate(comps, start=1):
            c = q if j % 2 == 0 else (r if j == t else p)
            coloring.colors[comp[0].label] = c

    def _color_q(self, coloring, i, info, cCD, cE):
        X, n, q = self.X, self.n, self.Q[i]
        hits, case = info
        forbidden = set()
        for label, (j, pt) in hits.items():
            if label.startswith("F") or j is None:
                raise ColoringConflict("lnc point %d misses a kernel piece" % i, [label])
            if label in coloring.colors:
                forbidden.add(coloring.colors[label])
        for k, other in enumerate(self.Q):
            key = "q%d" % k
            if key in coloring.colors and not X.sees(q, other):
                forbidden.add(coloring.colors[key])
        allowed = [c for c in range(3) if c not in forbidden]
        if n == 1:
            rule = cCD[i] if "CD0" not in hits else cE[i]
            if "CD0" in hits and "E0" in hits:
                a, b = hits["CD0"][1], hits["E0"][1]
                if _check_triple(X, [q, a, b]):
                    raise _triple([q, a, b], "the reflex point misses both sides")
        elif case == 1:
            rule = allowed[0] if allowed else None
        elif case == 2:
            rule = cCD[(i - 1) % n]
        elif case == 3:
            rule = cCD[i]
        else:
            rule = allowed[0] if allowed else None
        if rule is None or rule in forbidden:
            if not allowed:
                raise ColoringConflict("no color left for lnc point %d" % i, ["q%d" % i])
            coloring.notes.append("q%d: rule color %s forbidden, used %d" % (i, rule, allowed[0]))
            rule = allowed[0]
        coloring.colors["q%d" % i] = rule
        coloring.cases["q%d" % i] = case
        coloring.forbidden["q%d" % i] = sorted(forbidden)

    def _rotations(self, cases):
        n = self.n
        exc = {1: (1, n - 1), 2: (1, n)}.get(n % 3, ())
        good, rest = [], []
        for r in range(n):
            idx = [(pos - 1 + r) % n for pos in exc]
            (good if all(cases.get(i) != 1 for i in idx) else rest).append(r)
        return good + rest

    def _classes(self, coloring):
        classes = [[], [], []]
        extra = [[], [], []]
        for p in self.parts:
            for piece in (p.CD, p.E):
                if piece is not None:
                    classes[coloring.colors[piece.label]].append(piece)
            for comp in p.G:
                classes[coloring.colors[comp[0].label]].extend(comp)
        for i, q in enumerate(self.Q):
            key = "q%d" % i
            if key in coloring.colors:
                extra[coloring.colors[key]].append(q)
        return classes, extra

    def _cells(self, coloring):
        classes, extra = self._classes(coloring)
        kernel = [k for k in self.kernel if k is not None]
        cells = []
        for c in range(3):
            if not classes[c] and not extra[c]:
                continue
            cell = hull_cell(classes[c] + kernel, "color%d" % c, extra_points=extra[c])
            rep = verify_cell(cell, self.X)
            if not rep.ok:
                raise ColoringConflict("color class %d is not a convex subset of X: %s"
                                       % (c, rep.violations[0]["detail"]), ["color%d" % c])
            cells.append(cell)
        if not cells:
            cells.append(hull_cell(kernel, "kernel"))
        return cells

    def _attempt(self, r, qinfo, reverse=False):
        n = self.n
        cCD, cE = self.schedule(r)
        coloring = Coloring({}, rotation=r, mode="schedule")
        coloring.requirements = self.requirement_violations(cCD, cE) if n >= 2 else []
        if n < 2:
            coloring.requirements = [v for v in self.requirement_violations(cCD, cE)
                                     if v[0] == "R1"]
        for v in coloring.requirements:
            coloring.notes.append("requirement %s fails at leaf %d" % v)
        for i, p in enumerate(self.parts):
            if p.CD is not None:
                coloring.colors[p.CD.label] = cCD[i]
            if p.E is not None:
                coloring.colors[p.E.label] = cE[i]
            self._color_g(coloring, i, cCD[i], cE[i], reverse)
        coloring.cCD, coloring.cE = cCD, cE
        for i in range(n):
            if self.X.contains(self.Q[i]):
                self._color_q(coloring, i, qinfo[i], cCD, cE)
        return coloring, self._cells(coloring)

    def _alternating(self, qinfo):
        coloring = Coloring({}, rotation=0, mode="alternate")
        coloring.cases = {"q%d" % i: qinfo[i][1] for i in qinfo}
        coloring.requirements = []
        coloring.cCD = {i: i % 2 for i in range(self.n)}
        coloring.cE = dict(coloring.cCD)
        for i, p in enumerate(self.parts):
            for piece in (p.CD, p.E):
                if piece is not None:
                    coloring.colors[piece.label] = i % 2
            for comp in p.G:
                coloring.colors[comp[0].label] = i % 2
        for i in qinfo:
            coloring.colors["q%d" % i] = 2
        return coloring, self._cells(coloring)

    def run(self) -> Decomposition:
        n = self.n
        qinfo = {}
        for i in range(n):
            if self.X.contains(self.Q[i]):
                hits = self._q_hits(i)
                case, _ = self._case(i, hits)
                qinfo[i] = (hits, case)
        cases = {i: qinfo[i][1] for i in qinfo}
        for i in cases:
            j = (i + 1) % n
            if n >= 3 and j != i and cases[i] == 1 and cases.get(j) == 1:
                raise ColoringConflict("adjacent lnc points %d, %d both miss two locations"
                                       % (i, j), ["q%d" % i, "q%d" % j])
        errors = []
        # G components are numbered along the leaf; when the numbering runs
        # the other way from the one the rule expects, the reverse order works
        for r, rev in [(r, rev) for rev in (False, True) for r in self._rotations(cases)]:
            if rev and not any(p.G for p in self.parts):
                break
            try:
                coloring, cells = self._attempt(r, qinfo, rev)
            except (ColoringConflict, NonConvexUnion) as e:
                errors.append(str(e))
                continue
            if rev:
                coloring.notes.append("G components numbered in reverse")
            return Decomposition(cells, "E/n=%d" % n if n <= 2 else "E/leaves", 3, coloring,
                                 list(coloring.notes))
        if n % 2 == 0:
            try:
                coloring, cells = self._alternating(qinfo)
                return Decomposition(cells, "E/leaves-alternate", 3, coloring,
                                     ["two-color alternation"])
            except (ColoringConflict, NonConvexUnion) as e:
                errors.append(str(e))
        raise ColoringConflict("no rotation gives a valid coloring: %s" % errors[:3],
                               ["q%d" % i for i in range(n)])
