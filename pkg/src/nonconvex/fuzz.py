"""Seeded random instances and a driver that pushes them through
decompose, verify and the lower-bound search."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import geom
from .errors import AlphaRefuted, InvalidInput, NonconvexError
from .geom import Point, Polygon, Segment
from .invisibility import Certificate, best_bound, build_graph, clique_number, find_odd_circuit
from .invisibility import generate_witnesses
from .region import PuncturedRegion, normalize

FAMILIES = ("convex", "convex_points", "convex_segment", "star", "star_center",
            "two_convex", "antenna")


@dataclass
class FuzzConfig:
    coord: int = 8            # coordinates in [-coord, coord]
    max_vertices: int = 8
    witness_density: int = 2  # grid density for verify and bounds
    families: tuple = FAMILIES


def _rq(rng: random.Random, lo, hi, den: int = 2) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_convex(rng: random.Random, cfg: FuzzConfig, shift=(0, 0)) -> Optional[Polygon]:
    c = cfg.coord
    pts = [Point(Fraction(rng.randint(-c, c) + shift[0]), Fraction(rng.randint(-c, c) + shift[1]))
           for _ in range(rng.randint(3, cfg.max_vertices + 2))]
    hull = geom.convex_hull(pts)
    if len(hull) < 3:
        return None
    return Polygon(hull)


def random_star(rng: random.Random, cfg: FuzzConfig) -> Optional[Polygon]:
    """Radial polygon around the origin; star-shaped from the origin."""
    n = rng.randint(5, cfg.max_vertices + 2)
    dirs = set()
    while len(dirs) < n:
        d = Point(Fraction(rng.randint(-6, 6)), Fraction(rng.randint(-6, 6)))
        if d != (0, 0):
            dirs.add(geom.Point(d.x, d.y))
    ordered = sorted(dirs, key=geom.angle_key)
    ring = []
    for d in ordered:
        r = Fraction(rng.randint(2, 6), max(abs(d.x), abs(d.y)))
        ring.append(Point(d.x * r, d.y * r))
    # drop directions that would be collinear with the origin and a neighbour
    try:
        P = Polygon(ring)
    except InvalidInput:
        return None
    if not P.is_simple() or not P.contains(Point(Fraction(0), Fraction(0))):
        return None
    return P


def _interior_point(rng, P: Polygon, K=None) -> Optional[Point]:
    hull = K if K is not None else P.vertices
    for _ in range(20):
        a, b, c = rng.sample(list(hull), 3) if len(hull) >= 3 else (hull[0],) * 3
        w = [rng.randint(1, 5) for _ in range(3)]
        s = sum(w)
        p = Point((a.x * w[0] + b.x * w[1] + c.x * w[2]) / s,
                  (a.y * w[0] + b.y * w[1] + c.y * w[2]) / s)
        if geom.point_in_polygon(p, P) == "interior":
            return p
    return None


def _boundary_features(rng, P: Polygon, p_open: float = 0.15, p_point: float = 0.05) -> list:
    out = []
    for a, b in P.edges():
        r = rng.random()
        if r < p_open:
            out.append(Segment(a, b, "open"))
        elif r < p_open + p_point:
            out.append(geom.midpoint(a, b))
    return out


def random_instance(rng: random.Random, cfg: FuzzConfig = FuzzConfig()) -> Optional[tuple]:
    """(family, X) or None when the draw is degenerate."""
    fam = rng.choice(cfg.families)
    try:
        if fam in ("convex", "convex_points", "convex_segment"):
            P = random_convex(rng, cfg)
            if P is None:
                return None
            M = _boundary_features(rng, P)
            if fam == "convex_points":
                for _ in range(1 if rng.random() < 0.8 else 2):
                    p = _interior_point(rng, P)
                    if p is not None:
                        M.append(p)
            elif fam == "convex_segment":
                p, q = _interior_point(rng, P), _interior_point(rng, P)
                if p is None or q is None or p == q:
                    return None
                M.append(Segment(p, q, rng.choice(geom.CLOSURES)))
            return fam, normalize(P, M)
        if fam in ("star", "star_center"):
            P = random_star(rng, cfg)
            if P is None:
                return None
            M = _boundary_features(rng, P)
            K = geom.polygon_kernel(P)
            if fam == "star_center":
                r = rng.random()
                if r < 0.4:
                    M = []
                elif r < 0.6:
                    M = [Segment(a, b) for a, b in P.edges()]
            if fam == "star_center" and len(K) >= 3:
                p = _interior_point(rng, P, K)
                if p is None or not geom.in_convex_interior(p, K):
                    return None
                M.append(p)
            return fam, normalize(P, M)
        if fam == "two_convex":
            P = random_convex(rng, cfg)
            Q = random_convex(rng, cfg, shift=(3 * cfg.coord, 0))
            if P is None or Q is None:
                return None
            return fam, normalize([P, Q], _boundary_features(rng, P, p_point=0))
        if fam == "antenna":
            P = random_convex(rng, cfg)
            if P is None:
                return None
            v = P.vertices[rng.randrange(len(P))]
            # outward along the bisector of the exterior angle
            g = Point(sum(p.x for p in P.vertices) / len(P), sum(p.y for p in P.vertices) / len(P))
            tip = v + (v - g).scale(Fraction(rng.randint(1, 3), 2))
            if P.contains(tip):
                return None
            return fam, normalize(P, _boundary_features(rng, P), [Segment(v, tip)])
    except InvalidInput:
        return None
    return None


@dataclass
class FuzzStats:
    cases: int = 0
    routes: Counter = field(default_factory=Counter)
    families: Counter = field(default_factory=Counter)
    refuted: int = 0
    refuted_replayed: int = 0
    sandwich_checked: int = 0
    failures: list = field(default_factory=list)
    unreplayed: list = field(default_factory=list)
    over_bound: list = field(default_factory=list)
    sandwich_broken: list = field(default_factory=list)

    def summary(self) -> dict:
        return {"cases": self.cases, "routes": dict(sorted(self.routes.items())),
                "families": dict(sorted(self.families.items())),
                "refuted": self.refuted, "refuted_replayed": self.refuted_replayed,
                "sandwich_checked": self.sandwich_checked,
                "unreplayed": [str(u) for u in self.unreplayed[:20]],
                "failures": [str(f) for f in self.failures[:20]],
                "n_failures": len(self.failures),
                "over_bound": len(self.over_bound), "sandwich_broken": len(self.sandwich_broken)}


def check_instance(X: PuncturedRegion, stats: FuzzStats, cfg: FuzzConfig, tag: str = "") -> None:
    from .decompose import BOUNDS, decompose
    from .verify import replay_certificate, verify_decomposition

    stats.cases += 1
    W = generate_witnesses(X, cfg.witness_density)
    try:
        dec = decompose(X, density=cfg.witness_density)
    except AlphaRefuted as e:
        stats.refuted += 1
        c = e.certificate
        if isinstance(c, Certificate) and replay_certificate(c, X):
            stats.refuted_replayed += 1
        else:
            stats.unreplayed.append((tag, type(e).__name__, str(e)))
        stats.routes["refuted"] += 1
        return
    except NonconvexError as e:
        stats.failures.append((tag, type(e).__name__, str(e)))
        return
    stats.routes[dec.route] += 1
    rep = verify_decomposition(dec, X, W)
    if not rep.ok:
        stats.failures.append((tag, "verify", rep.violations[0]["detail"]))
        return
    if len(dec.cells) > BOUNDS[dec.route]:
        stats.over_bound.append((tag, dec.case_tag, len(dec.cells)))
    G = build_graph(X, W)
    certs = [clique_number(G)[1]]
    odd = find_odd_circuit(G)
    if odd is not None:
        certs.append(odd)
    lower = best_bound(certs)["gamma"]
    stats.sandwich_checked += 1
    if lower > len(dec.cells):
        stats.sandwich_broken.append((tag, lower, len(dec.cells)))


def run_fuzz(cases: int = 100, seed: int = 0, cfg: FuzzConfig = FuzzConfig()) -> FuzzStats:
    rng = random.Random(seed)
    stats = FuzzStats()
    draws = 0
    while stats.cases < cases:
        draws += 1
        got = random_instance(rng, cfg)
        if got is None:
            continue
        fam, X = got
        stats.families[fam] += 1
        check_instance(X, stats, cfg, tag="%s#%d" % (fam, draws))
    return stats
