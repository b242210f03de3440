"""One interior puncture: split the plane at it into two half-open
half-planes and decompose each side."""
from __future__ import annotations

from .. import geom
from ..cells import HalfOpenPlane, make_cell
from ..errors import PreconditionViolated
from ..geom import Point
from ..structure import analyze, valentine_cover
from ..region import PuncturedRegion
from .base import Decomposition, choose_split_direction, split_pair
from .theorem_e import theorem_E


def single_interior_point(X: PuncturedRegion) -> Point:
    if len(X.M_i) != 1 or not X.M_i[0].is_point:
        raise PreconditionViolated("M_i must be a single point")
    return X.M_i[0].at


def split_decompose(X: PuncturedRegion, tag: str, bound: int, per_side=None) -> Decomposition:
    p = single_interior_point(X)
    d = choose_split_direction(X, p)
    cells, notes = [], ["split direction %s" % (d,)]
    for k, Y in enumerate(split_pair(X, p, d)):
        if Y is None:
            continue
        sub = (per_side or theorem_E)(Y)
        for c in sub.cells:
            cells.append(type(c)(c.base, c.exclusions, "%s%s" % ("+-"[k], c.label)))
        notes.append("side %s: %s, %d cells" % ("+-"[k], sub.case_tag, len(sub.cells)))
    return Decomposition(cells, tag, bound, None, notes)


def theorem_F(X: PuncturedRegion) -> Decomposition:
    return split_decompose(X, "F", 6)


def theorem_G(X: PuncturedRegion) -> Decomposition:
    if not X.S.is_convex():
        raise PreconditionViolated("S must be convex")
    dec = split_decompose(X, "G", 4)
    return dec


def _chain_cover(X, st, h, p):
    """Two closed convex sets covering S intersected with the closed
    half-plane h, built from conv Q and the leaves alternately along the
    chain of leaves on that side."""
    P = geom.clip_convex(st.convQ, h)
    n = st.n
    plus = [h.contains(q) for q in st.Q]
    start = next((i for i in range(n) if not plus[i] and plus[(i + 1) % n]), None)
    if start is None:
        return None
    chain = []
    for k in range(n):
        i = (start + k) % n
        if not (plus[i] or plus[(i + 1) % n]):
            break
        part = geom.clip_convex(st.leaves[i].hull, h)
        if len(part) >= 3:
            chain.append(part)
    parts = geom.clip(st.S, h)
    K = geom.polygon_kernel(parts[0]) if len(parts) == 1 else ()
    extra = list(P) + list(K) + [p]
    groups = [chain[0::2], chain[1::2]]
    return [tuple(geom.convex_hull(extra + [v for leaf in g for v in leaf])) for g in groups]


def theorem_D(X: PuncturedRegion) -> Decomposition:
    """M_b empty or all of bd S: a closed convex cover of each closed half
    of S by at most two sets, each restricted to X and to its half-open
    half-plane."""
    p = single_interior_point(X)
    if X.M_b and not X.boundary_full():
        raise PreconditionViolated("M_b must be empty or all of bd S")
    st = analyze(X.S)
    through = st.convQ if st.n >= 3 else ()
    d = choose_split_direction(X, p, through=through)
    cells, notes = [], ["split direction %s" % (d,)]
    for k, dd in enumerate((d, Point(-d.x, -d.y))):
        T = HalfOpenPlane(p, dd)
        h = T.closure()
        parts = geom.clip(X.S, h)
        if len(parts) != 1:
            raise PreconditionViolated("a closed half of S is disconnected")
        cover = [C.base for C in valentine_cover(parts[0])]
        how = "closed cover"
        if len(cover) > 2 and st.n >= 3 and st.kernel_dim == 2:
            cover = _chain_cover(X, st, h, p) or cover
            how = "leaf chain"
        for j, C in enumerate(cover):
            c = make_cell(C, X, [T], "%s%d" % ("+-"[k], j))
            if c is not None:
                cells.append(c)
        notes.append("side %s: %d sets (%s)" % ("+-"[k], len(cover), how))
    return Decomposition(cells, "D", 4, None, notes)
