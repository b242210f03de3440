"""Constructive decompositions into convex cells."""
from .base import BOUNDS, Coloring, Decomposition, LeafPartition, split_half, split_pair
from .dispatch import ROUTES, decompose, dispatch, find_clique, route_of, search_clique
from .mt3 import main_theorem_3, two_coloring_of
from .theorem_ab import theorem_A, theorem_B
from .theorem_c import theorem_C
from .theorem_e import theorem_E
from .theorem_fg import theorem_D, theorem_F, theorem_G

__all__ = ["BOUNDS", "Coloring", "Decomposition", "LeafPartition", "ROUTES", "decompose",
           "dispatch", "find_clique", "search_clique", "main_theorem_3", "route_of", "split_half", "split_pair",
           "theorem_A", "theorem_B", "theorem_C", "theorem_D", "theorem_E", "theorem_F",
           "theorem_G", "two_coloring_of"]
