"""Pick the construction that applies to X and run it."""
from __future__ import annotations

from ..errors import (AlphaRefuted, ColoringConflict, InvisibilityTriple, NonConvexUnion,
                      NotConvexStar)
from ..invisibility import build_graph, clique_number, generate_witnesses
from ..region import PuncturedRegion, check_interior_points_in_kernel
from .base import Decomposition
from .theorem_ab import theorem_A, theorem_B
from .theorem_c import theorem_C
from .theorem_e import theorem_E
from .theorem_fg import theorem_D, theorem_F, theorem_G

ROUTES = {"A": theorem_A, "B": theorem_B, "C": theorem_C, "D": theorem_D,
          "E": theorem_E, "F": theorem_F, "G": theorem_G}


def route_of(X: PuncturedRegion) -> str:
    """Route letter chosen from the shape of X alone."""
    if X.antennae:
        return "B"
    if len(X.components) > 1:
        return "A"
    Mi = X.M_i
    if len(Mi) > 1 or any(not f.is_point for f in Mi):
        return "C"
    if not Mi:
        return "E"
    if X.S.is_convex():
        return "G"
    if not X.M_b or X.boundary_full():
        return "D"
    return "F"


def find_clique(X: PuncturedRegion, density: int = 3):
    """Clique certificate of size >= 3 on the default witness set, or None."""
    W = generate_witnesses(X, density)
    k, cert = clique_number(build_graph(X, W))
    return cert if k >= 3 else None


def search_clique(X: PuncturedRegion, density: int = 3):
    """find_clique at increasing densities."""
    for d in sorted({density, 2 * density + 1, 12, 20, 30, 40}):
        cert = find_clique(X, d)
        if cert is not None:
            return cert
    return None


def decompose(X: PuncturedRegion, density: int = 3) -> Decomposition:
    """Run the applicable construction.  Any :class:`AlphaRefuted` raised on
    the way carries a certificate; a clique one is searched for if missing.
    When a construction gets stuck the input is searched for a clique too,
    since the constructions only fail on inputs with three pairwise
    invisible points."""
    try:
        return _run(X, density)
    except (ColoringConflict, NonConvexUnion, NotConvexStar) as e:
        cert = search_clique(X, density)
        if cert is not None:
            raise InvisibilityTriple("construction stuck (%s); clique found" % e,
                                     certificate=cert) from e
        raise


def _run(X: PuncturedRegion, density: int) -> Decomposition:
    try:
        check_interior_points_in_kernel(X)
        route = route_of(X)
        if route == "A" and len(X.components) > 2:
            raise InvisibilityTriple("X has %d components" % len(X.components))
        return ROUTES[route](X)
    except AlphaRefuted as e:
        if getattr(e, "certificate", None) is None or isinstance(e.certificate, dict):
            cert = search_clique(X, density)
            if cert is not None:
                e.certificate = cert
        raise


dispatch = decompose
