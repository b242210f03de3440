"""Named example instances with rational coordinates.

Regular polygons are replaced by rational polygons that keep the incidences
the arguments rely on (collinearities, crossing points, angle inequalities);
those incidences are asserted exactly when an instance is built.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import geom
from .errors import UnknownName
from .geom import Point, Polygon, Segment, pt
from .region import PuncturedRegion, normalize

NAMES = ("ex1", "ex2", "ex3", "ex3b", "ex5", "ex6", "ex7")


@dataclass
class GalleryInstance:
    name: str
    X: PuncturedRegion
    expected: dict
    witnesses: tuple = ()
    rays: tuple = ()
    center: Point = None
    description: str = ""
    extra: dict = field(default_factory=dict)


def _open_edges(verts):
    n = len(verts)
    return [Segment(verts[i], verts[(i + 1) % n], "open") for i in range(n)]


def _hexagon():
    return [pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0), pt(-1, -2), pt(1, -2)]


def _ex1():
    p = _hexagon()
    a, b = pt(Fraction(1, 5), Fraction(-2, 5)), pt(Fraction(-1, 5), Fraction(2, 5))
    assert geom.orientation(p[5], p[2], a) == 0 and geom.orientation(p[5], p[2], b) == 0
    M = [Segment(p[5], p[0], "open"), Segment(p[1], p[2], "open"), Segment(a, b)]
    X = normalize(Polygon(p), M)
    return GalleryInstance("ex1", X, {"alpha_evidence": 2, "gamma_lower": 3, "gamma_upper": 3,
                                     "route": "C"},
                           description="hexagon minus two open edges and a central segment")


def _ex2():
    p = _hexagon()
    c = p[5]
    d = geom.lerp(p[5], p[2], Fraction(2, 5))
    M = [Segment(p[1], p[2], "open"), Segment(p[2], p[3], "open"), Segment(c, d)]
    X = normalize(Polygon(p), M)
    return GalleryInstance("ex2", X, {"alpha_evidence": 2, "gamma_lower": 3, "gamma_upper": 3,
                                     "route": "C"},
                           description="hexagon minus two open edges and a segment from a vertex")


STAR = [(0, 4), (1, 2), (3, 2), (2, 0), (3, -2), (1, -2), (0, -4), (-1, -2), (-3, -2),
        (-2, 0), (-3, 2), (-1, 2)]


def _star(name, boundary_removed):
    verts = [pt(x, y) for x, y in STAR]
    O = pt(0, 0)
    M = [O]
    if boundary_removed:
        M += [Segment(verts[i], verts[(i + 1) % 12]) for i in range(12)]
    X = normalize(Polygon(verts), M)
    tips = verts[0::2]
    W = tuple(tips) if not boundary_removed else tuple(
        geom.lerp(O, t, Fraction(19, 20)) for t in tips)
    return GalleryInstance(name, X, {"alpha_evidence": 2, "gamma_lower": 4, "gamma_upper": 4,
                                    "route": "D", "beta": 2},
                           witnesses=W, center=O,
                           description="Star of David minus its center"
                           + (" and its boundary" if boundary_removed else ""))


def _ex5():
    verts = [pt(0, 10), pt(-10, 3), pt(-6, -8), pt(6, -8), pt(10, 3)]
    X = normalize(Polygon(verts), _open_edges(verts))
    return GalleryInstance("ex5", X, {"alpha_evidence": 2, "gamma_lower": 3, "gamma_upper": 3,
                                     "route": "E"},
                           witnesses=tuple(verts),
                           description="pentagon interior plus its vertices")


def _rational_unit(theta: float, den: int = 1000) -> Point:
    t = Fraction(math.tan(theta / 2)).limit_denominator(den)
    return Point((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


def _ngon(n, den=1000):
    out = []
    for k in range(n):
        th = 2 * math.pi * k / n
        if th > math.pi:
            q = _rational_unit(th - 2 * math.pi, den)
        else:
            q = _rational_unit(th, den)
        out.append(q)
    return out


def _ex7():
    verts = _ngon(7)
    O = pt(0, 0)
    for i in range(7):
        for j in range(i + 2, 7):
            assert geom.orientation(verts[i], verts[j], O) != 0
    X = normalize(Polygon(verts), _open_edges(verts) + [O])
    return GalleryInstance("ex7", X, {"alpha_evidence": 2, "gamma_lower": 4, "gamma_upper": 4,
                                     "route": "G"},
                           witnesses=tuple(verts), center=O,
                           description="7-gon minus its center and open edges")


TIP_SCALE = Fraction(9, 20)


def _ex6():
    n = 48
    p = _ngon(n)
    P = p + [p[0]]
    s = TIP_SCALE
    t = [None] * (n + 1)
    for k in range(1, n // 2 + 1):
        o = P[2 * k - 1]
        t[2 * k - 1] = o + (o - P[2 * k]).scale(s)
        t[2 * k] = o + (o - P[2 * k - 2]).scale(s)
    ring = []
    for i in range(n):
        ring.append(P[i])
        ring.append(t[i + 1])
    O = pt(0, 0)
    for k in range(1, n // 2 + 1):
        # odd vertices are the crossings of [p_{2k-2}, t_{2k}] and [t_{2k-1}, p_{2k}]
        assert geom.orientation(P[2 * k - 2], P[2 * k - 1], t[2 * k]) == 0
        assert geom.orientation(t[2 * k - 1], P[2 * k - 1], P[2 * k]) == 0
    S = Polygon(ring)
    vs = list(S.vertices)
    for i, v in enumerate(vs):
        if v in p:
            assert geom.orientation(vs[i - 1], v, vs[(i + 1) % len(vs)]) < 0, "p not reflex"
    odd = [P[2 * k - 1] for k in range(1, n // 2 + 1)]
    X = normalize(S, odd + [O])
    rays = tuple(P[4 * k] - O for k in range(12))
    W = []
    for j in range(12):
        c = 4 * j + 2
        W += [P[c], t[c - 1], t[c], t[c + 1], t[c + 2]]
    return GalleryInstance("ex6", X, {"alpha_evidence": 2, "gamma_lower": 6, "gamma_upper": 6,
                                     "route": "F", "sectors": 12, "per_sector_lb": 3,
                                     "max_sectors": 7},
                           witnesses=tuple(W), rays=rays, center=O,
                           description="48-gon with triangular domes, odd vertices and "
                                       "center removed",
                           extra={"tips": tuple(t[1:]), "polygon": tuple(p)})


_BUILDERS = {
    "ex1": _ex1,
    "ex2": _ex2,
    "ex3": lambda: _star("ex3", False),
    "ex3b": lambda: _star("ex3b", True),
    "ex5": _ex5,
    "ex6": _ex6,
    "ex7": _ex7,
}


@lru_cache(maxsize=None)
def gallery(name: str) -> GalleryInstance:
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise UnknownName("unknown gallery instance %r (known: %s)" % (name, ", ".join(NAMES)))
    return build()
