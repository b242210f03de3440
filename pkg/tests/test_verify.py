import pytest

from nonconvex.cells import make_cell
from nonconvex.decompose import theorem_D, theorem_E, theorem_F
from nonconvex.gallery import gallery
from nonconvex.geom import pt
from nonconvex.invisibility import (Certificate, build_graph, find_odd_circuit, generate_witnesses,
                                    sector_certificates, sector_counting_bound, witness_set)
from nonconvex.region import normalize
from nonconvex.verify import replay_certificate, verify_cell, verify_cover

from conftest import F, square


def test_whole_convex_S_is_a_valid_cell():
    X = normalize(square())
    assert verify_cell(make_cell(square().vertices, X, check=False), X).ok


def test_cell_through_removed_center_fails():
    X = normalize(square(), [pt(F(1, 2), F(1, 2))])
    rep = verify_cell(make_cell(square().vertices, X, check=False), X)
    assert not rep.ok and rep.violations[0]["kind"] == "containment"


def test_cell_leaving_S_fails():
    X = normalize(square())
    c = make_cell([pt(0, 0), pt(2, 0), pt(0, 2)], X, check=False)
    assert not verify_cell(c, X).ok


def test_star_cells_pass():
    g = gallery("ex3")
    for c in theorem_D(g.X).cells:
        assert verify_cell(c, g.X).ok


def test_cover_single_cell():
    X = normalize(square())
    W = generate_witnesses(X, 3)
    assert verify_cover([make_cell(square().vertices, X)], X, W).ok


def test_cover_pentagon():
    g = gallery("ex5")
    dec = theorem_E(g.X)
    assert verify_cover(dec.cells, g.X, generate_witnesses(g.X, 3)).ok


@pytest.mark.slow
def test_cover_missing_cell_fails():
    g = gallery("ex6")
    cells = theorem_F(g.X).cells
    W = witness_set(list(g.witnesses) + list(generate_witnesses(g.X, 2)))
    assert verify_cover(cells, g.X, W).ok
    assert not verify_cover(cells[1:], g.X, W).ok


def test_cover_dropping_star_cell_fails():
    g = gallery("ex3")
    cells = theorem_D(g.X).cells
    W = witness_set(g.witnesses)
    assert not verify_cover(cells[:-1], g.X, W).ok


def test_replay_odd_circuit():
    X = gallery("ex1").X
    c = find_odd_circuit(build_graph(X, generate_witnesses(X, 6)))
    assert replay_certificate(c, X)


def test_replay_rejects_fabricated_clique():
    X = normalize(square())
    fake = Certificate("clique", (pt(0, 0), pt(1, 0), pt(0, 1)), "alpha", 3, {})
    assert not replay_certificate(fake, X)


def test_replay_rejects_circuit_with_visible_pair():
    g = gallery("ex5")
    pts = list(find_odd_circuit(build_graph(g.X, witness_set(g.witnesses))).points)
    pts[0], pts[1] = pts[1], pts[0]
    cert = Certificate("odd_circuit", tuple(pts), "gamma", 3, {})
    assert not replay_certificate(cert, g.X)


def test_replay_sector_certificate():
    g = gallery("ex6")
    subs = sector_certificates(g.X, g.rays, g.center, witness_set(g.witnesses))
    k, cert = sector_counting_bound(g.X, g.rays, 3, g.center, subs)
    assert k == 6 and replay_certificate(cert, g.X)
    forged = Certificate(cert.kind, cert.points, cert.measure, 7, cert.data)
    assert not replay_certificate(forged, g.X)
