"""Exact lattice-polytope toolkit for integer decomposition of Minkowski sums."""

from .geometry import Inequality, Polytope, contains, convex_hull, dual
from .idp import idp_pair_check, minkowski_sum, round_decompose
from .lattice import is_idp, is_normal, lattice_points

__all__ = [
    "Inequality",
    "Polytope",
    "contains",
    "convex_hull",
    "dual",
    "idp_pair_check",
    "is_idp",
    "is_normal",
    "lattice_points",
    "minkowski_sum",
    "round_decompose",
]
