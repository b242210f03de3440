from fractions import Fraction

from hypothesis import given, settings, strategies as st

from nonconvex import geom
from nonconvex.geom import HalfPlane, Point, Polygon, Segment, pt

from conftest import F, lshape, square


def test_orientation_signs():
    assert geom.orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert geom.orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0
    assert geom.orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1


def test_segment_intersection_cases():
    hit = geom.segment_intersection(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, -1), pt(1, 1)))
    assert hit == pt(1, 0)
    assert geom.segment_intersection(Segment(pt(0, 0), pt(1, 0), "open"),
                                     Segment(pt(1, 0), pt(2, 0))) is None
    sub = geom.segment_intersection(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(3, 0)))
    assert isinstance(sub, Segment) and {sub.a, sub.b} == {pt(1, 0), pt(2, 0)}


def test_point_in_polygon(unit_square):
    assert geom.point_in_polygon(pt(F(1, 2), F(1, 2)), unit_square) == "interior"
    assert geom.point_in_polygon(pt(0, 0), unit_square) == "boundary"
    assert geom.point_in_polygon(pt(5, 5), unit_square) == "exterior"


def test_clip_square(unit_square):
    half = geom.clip(unit_square, HalfPlane(F(1), F(0), F(1, 2)))
    assert len(half) == 1
    assert set(half[0].vertices) == {pt(0, 0), pt(F(1, 2), 0), pt(F(1, 2), 1), pt(0, 1)}
    same = geom.clip(unit_square, HalfPlane(F(1), F(0), F(2)))
    assert same[0].vertices == unit_square.vertices
    assert geom.clip(unit_square, HalfPlane(F(1), F(0), F(-1))) == []


def test_kernel_convex_is_itself():
    P = Polygon([pt(0, 0), pt(4, 0), pt(5, 3), pt(2, 5), pt(-1, 3)])
    assert set(geom.polygon_kernel(P)) == set(P.vertices)


def test_kernel_two_squares_sharing_corner():
    P = Polygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2), pt(1, 1), pt(0, 1)])
    assert geom.polygon_kernel(P) == (pt(1, 1),)


def _kernel_oracle(P, p):
    # p is in the kernel iff it is on the inner side of every edge line
    v = P.vertices
    return all(geom.orientation(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))


def test_kernel_lshape_matches_oracle():
    P = lshape()
    K = geom.polygon_kernel(P)
    assert set(K) == {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}
    for x in range(0, 9):
        for y in range(0, 9):
            p = pt(F(x, 2), F(y, 2))
            if geom.point_in_polygon(p, P) != "exterior":
                assert _kernel_oracle(P, p) == geom.in_convex(p, K)


def test_convex_hull_cases():
    sq = [pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]
    assert set(geom.convex_hull(sq + [pt(F(1, 2), F(1, 2))])) == set(sq)
    assert set(geom.convex_hull([pt(0, 0), pt(1, 1), pt(2, 2)])) == {pt(0, 0), pt(2, 2)}
    assert geom.convex_hull([pt(0, 0)]) == (pt(0, 0),)


def test_area():
    assert geom.polygon_area(square()) == 1
    assert geom.polygon_area(Polygon([pt(0, 0), pt(1, 0), pt(0, 1)])) == F(1, 2)
    assert geom.polygon_area(Polygon([pt(0, 1), pt(1, 0), pt(0, 0)])) > 0


# ---------------------------------------------------------------- properties

coord = st.integers(min_value=-6, max_value=6).map(Fraction)
points = st.builds(Point, coord, coord)


@st.composite
def convex_polygons(draw):
    pts = draw(st.lists(points, min_size=3, max_size=9))
    hull = geom.convex_hull(pts)
    if len(hull) < 3:
        hull = (pt(0, 0), pt(1, 0), pt(0, 1))
    return Polygon(hull)


halfplanes = st.tuples(coord, coord, coord).filter(lambda t: t[0] != 0 or t[1] != 0).map(
    lambda t: HalfPlane(*t))


def _area(parts):
    return sum((geom.polygon_area(P) for P in parts), Fraction(0))


@settings(max_examples=60, deadline=None)
@given(convex_polygons(), halfplanes)
def test_clip_idempotent_and_additive(P, h):
    once = geom.clip(P, h)
    twice = [Q for R in once for Q in geom.clip(R, h)]
    assert _area(once) == _area(twice)
    assert _area(once) + _area(geom.clip(P, h.complement().closure())) == geom.polygon_area(P)


@settings(max_examples=60, deadline=None)
@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert geom.orientation(p, q, r) == -geom.orientation(q, p, r)
    assert geom.orientation(p, q, r) == geom.orientation(q, r, p)


@settings(max_examples=60, deadline=None)
@given(st.lists(points, min_size=1, max_size=12))
def test_hull_contains_inputs(pts):
    hull = geom.convex_hull(pts)
    for p in pts:
        assert geom.in_convex(p, hull)
