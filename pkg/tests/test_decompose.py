import pytest

from nonconvex.decompose import (BOUNDS, decompose, main_theorem_3, route_of, theorem_A,
                                 theorem_B, theorem_C, theorem_D, theorem_E, theorem_F, theorem_G,
                                 two_coloring_of)
from nonconvex.errors import CommonSeerFound, NotAntennaPoint, PreconditionViolated
from nonconvex.gallery import _ngon, gallery
from nonconvex.geom import Polygon, Segment, pt
from nonconvex.invisibility import generate_witnesses, witness_set
from nonconvex.region import normalize
from nonconvex.verify import verify_decomposition

from conftest import F, regular_even, square

CENTER = pt(F(1, 2), F(1, 2))


def ok(dec, X, W=None):
    if W is not None:
        W = witness_set(W)
    rep = verify_decomposition(dec, X, W)
    assert rep.ok, rep.violations[:3]
    assert len(dec.cells) <= dec.claimed_bound
    return len(dec.cells)


def open_boundary(P):
    return [Segment(a, b, "open") for a, b in P.edges()]

# ---------------------------------------------------------------- A, B


def test_A_two_squares():
    X = normalize([square(), square(3, 0)])
    assert ok(theorem_A(X), X) == 2


def test_A_dumbbell_without_neck():
    neck = Segment(pt(1, F(1, 2)), pt(3, F(1, 2)))
    X = normalize([square(), square(3, 0)], [Segment(neck.a, neck.b, "open")], [neck])
    assert ok(theorem_A(X, CENTER, pt(F(7, 2), F(1, 2))), X) == 2


def test_A_convex_has_common_seer():
    X = normalize(square())
    with pytest.raises(CommonSeerFound):
        theorem_A(X, pt(0, 0), pt(1, 1))


def test_B_square_with_antenna():
    X = normalize(square(), [], [Segment(pt(1, 1), pt(2, 2))])
    assert ok(theorem_B(X), X) == 2


def test_B_segment_minus_point():
    X = normalize([], [pt(1, 0)], [Segment(pt(0, 0), pt(2, 0))])
    assert ok(theorem_B(X), X) == 2


def test_B_segment():
    X = normalize([], [], [Segment(pt(0, 0), pt(2, 0))])
    assert ok(theorem_B(X), X) == 1


def test_B_requires_antenna():
    with pytest.raises(NotAntennaPoint):
        theorem_B(normalize(square()))

# ---------------------------------------------------------------- C, E


@pytest.mark.parametrize("name", ["ex1", "ex2"])
def test_C_examples(name):
    X = gallery(name).X
    assert ok(theorem_C(X), X) == 3


def test_C_interior_segment():
    X = normalize(square(0, 0, 4), [Segment(pt(1, 1), pt(3, 2))])
    assert ok(theorem_C(X), X) == 2


def test_E_pentagon():
    g = gallery("ex5")
    dec = theorem_E(g.X)
    assert dec.case_tag == "E/n=0"
    assert ok(dec, g.X, g.witnesses) == 3


def test_E_convex():
    X = normalize(square())
    assert ok(theorem_E(X), X) == 1


def test_E_even_polygon_missing_midpoints():
    P = regular_even(6)
    X = normalize(P, [pt((a.x + b.x) / 2, (a.y + b.y) / 2) for a, b in P.edges()])
    assert ok(theorem_E(X), X) == 2

# ---------------------------------------------------------------- D, F, G


@pytest.mark.parametrize("name", ["ex3", "ex3b"])
def test_D_stars(name):
    g = gallery(name)
    assert ok(theorem_D(g.X), g.X, g.witnesses) == 4


def test_D_convex_minus_center():
    X = normalize(square(), [CENTER])
    assert ok(theorem_D(X), X) == 2


def test_F_square_minus_center():
    X = normalize(square(), [CENTER])
    assert ok(theorem_F(X), X) == 2


def test_F_pentagon_vertex_punctures():
    P = Polygon(_ngon(5, 100))
    X = normalize(P, [pt(0, 0)] + list(P.vertices))
    assert ok(theorem_F(X), X) <= 6


@pytest.mark.slow
def test_F_example6():
    g = gallery("ex6")
    assert ok(theorem_F(g.X), g.X, g.witnesses) == 6


def test_G_heptagon():
    g = gallery("ex7")
    assert ok(theorem_G(g.X), g.X, g.witnesses) == 4


def test_G_convex_minus_center():
    X = normalize(square(), [CENTER])
    assert ok(theorem_G(X), X) == 2


def test_G_open_convex_minus_center():
    X = normalize(square(), [CENTER] + open_boundary(square()))
    dec = theorem_G(X)
    ok(dec, X)
    assert len(dec) <= 4

# ---------------------------------------------------------------- MT3


def test_mt3_star():
    g = gallery("ex3")
    classes = two_coloring_of(g.X, g.witnesses)
    assert classes is not None and len(classes) == 2
    assert ok(main_theorem_3(g.X, classes), g.X, g.witnesses) == 4


def test_mt3_boundary_point():
    X = normalize(square(), [pt(F(1, 2), 0)])
    W = list(generate_witnesses(X, 3))
    assert ok(main_theorem_3(X, [W]), X, W) == 2


def test_mt3_square_halves():
    X = normalize(square(-1, -1, 2), [pt(0, 0)])
    W = list(generate_witnesses(X, 3))
    left = [w for w in W if w.x < 0 or (w.x == 0 and w.y > 0)]
    right = [w for w in W if w.x > 0 or (w.x == 0 and w.y < 0)]
    assert ok(main_theorem_3(X, [left, right]), X, W) == 2


def test_mt3_needs_classes():
    with pytest.raises(PreconditionViolated):
        main_theorem_3(normalize(square(), [CENTER]))

# ---------------------------------------------------------------- dispatch


@pytest.mark.parametrize("name", ["ex1", "ex2", "ex3", "ex3b", "ex5", "ex6", "ex7"])
def test_route_matches_gallery(name):
    g = gallery(name)
    assert route_of(g.X) == g.expected["route"]


def test_dispatch_examples():
    dec = decompose(gallery("ex1").X)
    assert dec.route == "C" and len(dec) <= 3
    X = normalize(square())
    assert len(decompose(X)) == 1


@pytest.mark.slow
def test_dispatch_example6():
    g = gallery("ex6")
    dec = decompose(g.X)
    assert dec.route == "F" and ok(dec, g.X, g.witnesses) == 6


def test_bound_table():
    assert BOUNDS == {"A": 2, "B": 2, "C": 3, "D": 4, "E": 3, "F": 6, "G": 4, "MT3": 4}
