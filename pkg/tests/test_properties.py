import random

from hypothesis import HealthCheck, given, settings, strategies as st

from nonconvex.decompose import BOUNDS
from nonconvex.fuzz import FuzzConfig, FuzzStats, check_instance, random_instance
from nonconvex.invisibility import build_graph, chromatic_number, clique_number, generate_witnesses


def draw(seed, cfg=FuzzConfig()):
    rng = random.Random(seed)
    while True:
        got = random_instance(rng, cfg)
        if got is not None:
            return got


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(0, 2 ** 32))
def test_dispatch_output_verifies(seed):
    fam, X = draw(seed)
    stats = FuzzStats()
    check_instance(X, stats, FuzzConfig(), tag=fam)
    assert not stats.failures, stats.failures
    assert not stats.over_bound and not stats.sandwich_broken


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_clique_at_most_chromatic(seed):
    _, X = draw(seed, FuzzConfig(coord=4, max_vertices=5))
    G = build_graph(X, generate_witnesses(X, 1))
    if G.n <= 40:
        assert clique_number(G)[0] <= chromatic_number(G)[0]


def test_bound_table_maximum():
    assert max(BOUNDS.values()) == 6 == BOUNDS["F"]
    assert BOUNDS["C"] == BOUNDS["E"] == 3
