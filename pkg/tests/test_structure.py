import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from nonconvex import geom
from nonconvex.errors import OriginNotInKernel
from nonconvex.fuzz import FuzzConfig, random_star
from nonconvex.gallery import gallery
from nonconvex.geom import Point, pt
from nonconvex.structure import analyze, relative_convex_hull, valentine_cover

from conftest import F, lshape, square


def _covers(cells, S, steps=24):
    """Grid oracle: every sample of S lies in some cell."""
    x0 = min(p.x for p in S.vertices)
    x1 = max(p.x for p in S.vertices)
    y0 = min(p.y for p in S.vertices)
    y1 = max(p.y for p in S.vertices)
    for i in range(steps + 1):
        for j in range(steps + 1):
            p = Point(x0 + (x1 - x0) * F(i, steps), y0 + (y1 - y0) * F(j, steps))
            if S.contains(p) and not any(geom.in_convex(p, c.base) for c in cells):
                return False
    return True


def _pinwheel(n):
    """Star polygon whose lnc set has n points: convex n-gon with a spike on each edge."""
    from nonconvex.gallery import _ngon
    outer = _ngon(2 * n, 1000)
    ring = []
    for k, v in enumerate(outer):
        ring.append(v if k % 2 else Point(v.x * F(3, 2), v.y * F(3, 2)))
    return geom.Polygon(ring)


def test_analyze_counts():
    assert analyze(square()).n == 0
    assert analyze(lshape()).n == 1
    assert analyze(gallery("ex3").X.S).n == 6


def test_analyze_kernel_dim():
    assert analyze(square()).kernel_dim == 2
    assert analyze(lshape()).kernel_dim == 2


def test_valentine_convex_is_itself():
    cells = valentine_cover(square())
    assert len(cells) == 1 and set(cells[0].base) == set(square().vertices)


@pytest.mark.parametrize("n,expect", [(4, 2), (5, 3), (6, 2)])
def test_valentine_cover_sizes(n, expect):
    S = _pinwheel(n)
    assert analyze(S).n == n
    cells = valentine_cover(S)
    assert len(cells) == expect
    for c in cells:
        assert geom.Polygon(c.base).is_convex()
        assert all(S.contains(v) for v in c.base)
    assert _covers(cells, S)


def test_valentine_lshape():
    cells = valentine_cover(lshape())
    assert len(cells) == 2 and _covers(cells, lshape())


def test_relative_hull_rejects_bad_origin():
    with pytest.raises(OriginNotInKernel):
        relative_convex_hull(lshape(), [pt(1, 1)], pt(3, 1))

# ---------------------------------------------------------------- oracle


def check_relative_hull(S, Fpts, o):
    P, state = relative_convex_hull(S, Fpts, o)
    assert all(P.contains(p) for p in Fpts)
    assert all(S.contains(v) for v in P.vertices)
    for a, b in zip(P.vertices, P.vertices[1:] + P.vertices[:1]):
        assert geom.segment_in_polygon(a, b, S)
    # convex relative to S: a chord of S between points of P stays in P
    probe = list(P.vertices) + list(Fpts)
    for a, b in itertools.combinations(probe, 2):
        if geom.segment_in_polygon(a, b, S):
            assert geom.segment_in_polygon(a, b, P), (a, b)
    K = geom.polygon_kernel(P)
    assert len(K) >= 3 and geom.in_convex_interior(o, K)
    assert len(P) <= 2 * len(state.F_1)


def test_relative_hull_lshape():
    check_relative_hull(lshape(), [pt(3, 1), pt(1, 3)], pt(1, 1))


def test_relative_hull_star():
    S = gallery("ex3").X.S
    check_relative_hull(S, list(gallery("ex3").witnesses), pt(0, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_relative_hull_random_star(seed):
    rng = random.Random(seed)
    S = None
    while S is None:
        S = random_star(rng, FuzzConfig())
    K = geom.polygon_kernel(S)
    o = pt(0, 0)
    if len(K) < 3 or not geom.in_convex_interior(o, K):
        return
    Fpts = []
    for _ in range(rng.randint(1, 5)):
        v = S.vertices[rng.randrange(len(S))]
        t = F(rng.randint(1, 4), 4)
        Fpts.append(Point(v.x * t, v.y * t))
    check_relative_hull(S, Fpts, o)
