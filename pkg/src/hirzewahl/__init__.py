"""Intersection theory, cohomology counts and Gaussian-map ranks for nodal
curves on Hirzebruch surfaces and their blow-ups."""

from .picard import (BlownSurface, DivisorClass, HirzebruchSurface, blowup, canonical,
                     genus, intersect, nodal_classes, self_intersection, surface)
from .riemann_roch import (chi_line, chi_omega_twist, chi_omega_twist_rank2, dim_table,
                           h0_anticanonical, h_line)

__version__ = "0.1.0"

__all__ = [
    "BlownSurface", "DivisorClass", "HirzebruchSurface", "blowup", "canonical", "genus",
    "intersect", "nodal_classes", "self_intersection", "surface", "chi_line",
    "chi_omega_twist", "chi_omega_twist_rank2", "dim_table", "h0_anticanonical", "h_line",
]
