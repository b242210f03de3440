import itertools

from hypothesis import given, settings, strategies as st

from nonconvex.gallery import gallery
from nonconvex.geom import Point, pt
from nonconvex.invisibility import (InvisibilityGraph, WitnessSet, build_graph, chromatic_number,
                                    clique_number, convex_partition_number, find_odd_circuit,
                                    generate_witnesses, hull_in_X, max_sectors_per_convex_set,
                                    sector_bound, sector_counting_bound, witness_set)
from nonconvex.region import normalize

from conftest import F, square


def graph_from_edges(n, edges):
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    pts = tuple(pt(i, 0) for i in range(n))
    return InvisibilityGraph(WitnessSet(pts), tuple(adj))


C5 = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
EMPTY = graph_from_edges(4, [])


def test_witnesses_unit_square():
    W = generate_witnesses(normalize(square()), 1)
    assert W.provenance.count("vertex") == 4
    assert W.provenance.count("midpoint") == 4
    assert W.provenance.count("grid") == 1
    assert len(W) == 9


def test_witnesses_offsets_around_puncture():
    c = pt(F(1, 2), F(1, 2))
    W = generate_witnesses(normalize(square(), [c]), 2)
    offs = [p for p, t in zip(W.points, W.provenance) if t == "offset"]
    assert len(offs) == 4 and all(max(abs(p.x - c.x), abs(p.y - c.y)) > 0 for p in offs)
    assert c not in W.points


def test_witnesses_deterministic():
    X = gallery("ex2").X
    assert generate_witnesses(X, 3) == generate_witnesses(X, 3)


def test_graph_convex_edgeless():
    G = build_graph(normalize(square()), generate_witnesses(normalize(square()), 3))
    assert G.edge_count() == 0


def test_graph_star_spikes():
    g = gallery("ex3")
    G = build_graph(g.X, witness_set(g.witnesses))
    tips = G.witness.points
    # spike tips in angular order; invisible pairs are adjacent spikes and opposite ones
    import math
    order = sorted(range(6), key=lambda i: math.atan2(tips[i].y, tips[i].x))
    pos = {v: k for k, v in enumerate(order)}
    expected = {frozenset((i, j)) for i in range(6) for j in range(i + 1, 6)
                if (pos[i] - pos[j]) % 6 in (1, 5, 3)}
    got = {frozenset((i, j)) for i in range(6) for j in range(i + 1, 6) if G.edge(i, j)}
    assert got == expected


def test_graph_pentagon_cycle():
    g = gallery("ex5")
    G = build_graph(g.X, witness_set(g.witnesses))
    assert G.edge_count() == 5 and all(len(G.neighbors(i)) == 2 for i in range(5))


def test_clique_number():
    assert clique_number(EMPTY)[0] == 1
    assert clique_number(C5)[0] == 2
    X = gallery("ex1").X
    assert clique_number(build_graph(X, generate_witnesses(X, 6)))[0] == 2


def test_chromatic_number():
    assert chromatic_number(EMPTY)[0] == 1
    assert chromatic_number(C5)[0] == 3
    g = gallery("ex3")
    assert chromatic_number(build_graph(g.X, witness_set(g.witnesses)))[0] == 2


def test_odd_circuit():
    bip = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert find_odd_circuit(bip) is None
    X = gallery("ex1").X
    c = find_odd_circuit(build_graph(X, generate_witnesses(X, 6)))
    assert c is not None and len(c.points) == 5
    g = gallery("ex5")
    c = find_odd_circuit(build_graph(g.X, witness_set(g.witnesses)))
    assert c is not None and set(c.points) == set(g.witnesses)


def test_partition_number():
    X = normalize(square())
    assert convex_partition_number(X, generate_witnesses(X, 2))[0] == 1
    g = gallery("ex3")
    assert convex_partition_number(g.X, g.witnesses)[0] == 4
    g = gallery("ex7")
    assert convex_partition_number(g.X, g.witnesses)[0] == 4


def test_sector_arithmetic():
    assert sector_bound(12, 3, 7) == 6
    assert sector_bound(1, 5, 1) == 5
    assert sector_bound(4, 1, 2) == 2
    assert max_sectors_per_convex_set(gallery("ex6").rays) == 7
    assert max_sectors_per_convex_set([pt(1, 0)]) == 1


def _brute_max_sectors(rays, steps=720):
    """Sample directions on a fine rational grid around the circle."""
    from nonconvex.invisibility import sectors_met
    best = 0
    for k in range(steps):
        # points on the square boundary as directions
        t = F(8 * k, steps) - 4
        if t < -2:
            d = Point(F(1), t + 3)
        elif t < 0:
            d = Point(-(t + 1), F(1))
        elif t < 2:
            d = Point(F(-1), -(t - 1))
        else:
            d = Point(t - 3, F(-1))
        best = max(best, sectors_met(rays, d))
    return best


def test_max_sectors_matches_sampling():
    rays = list(gallery("ex6").rays)
    assert max_sectors_per_convex_set(rays) == _brute_max_sectors(rays)


def test_sector_counting_single_sector():
    X = normalize(square(-1, -1, 2), [pt(0, 0)])
    k, cert = sector_counting_bound(X, [pt(1, 0)], 3, pt(0, 0))
    assert k == 3 and cert.data["max_sectors"] == 1


def test_hull_in_X():
    X = normalize(square(), [pt(F(1, 2), F(1, 2))])
    assert not hull_in_X(X, [pt(0, 0), pt(1, 1)])
    assert hull_in_X(X, [pt(0, 0), pt(1, 0)])

# ---------------------------------------------------------------- oracles


def brute_clique(G):
    best = 1 if G.n else 0
    for r in range(2, G.n + 1):
        if any(all(G.edge(i, j) for i, j in itertools.combinations(c, 2))
               for c in itertools.combinations(range(G.n), r)):
            best = r
    return best


def brute_chromatic(G, limit=4):
    for k in range(1, limit + 1):
        for col in itertools.product(range(k), repeat=G.n):
            if all(col[i] != col[j] for i in range(G.n) for j in G.neighbors(i)):
                return k
    return None


graphs = st.integers(1, 7).flatmap(lambda n: st.sets(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]),
    max_size=n * (n - 1) // 2).map(lambda es: graph_from_edges(n, es)))


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_clique_and_chromatic_match_brute_force(G):
    k, cert = clique_number(G)
    assert k == brute_clique(G)
    chi = brute_chromatic(G)
    if chi is not None:
        assert chromatic_number(G)[0] == chi
    assert k <= chromatic_number(G)[0]


def test_sandwich_on_examples():
    for name in ("ex3", "ex5", "ex7"):
        g = gallery(name)
        G = build_graph(g.X, witness_set(g.witnesses))
        a = clique_number(G)[0]
        b = chromatic_number(G)[0]
        c = convex_partition_number(g.X, g.witnesses)[0]
        assert a <= b <= c
