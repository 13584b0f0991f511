"""Exact combinatorics of reflexive polytopes and their Calabi-Yau invariants."""

from .errors import ReflexiveError
from .lattice_core import AbelianQuotient, hermite_normal_form, lattice_quotient, smith_normal_form
from .polytope import (
    LatticePolytope,
    hull,
    is_reflexive,
    lattice_points,
    normal_form,
    normalized_volume,
    polar_dual,
)
from .toric_fan import Cone, Fan, classify_cone, face_fan, normal_fan
from .triangulate import mpcp_fan, regular_fine_triangulation, verify_regularity
from .invariants import euler_cy3, hodge_h11, hodge_h21, mirror_report
from .pairs import ReflexivePair, fermat_group, weighted_simplex
from .classify import enumerate_reflexive

__version__ = "0.1.0"

__all__ = [
    "AbelianQuotient", "Cone", "Fan", "LatticePolytope", "ReflexiveError", "ReflexivePair",
    "classify_cone", "enumerate_reflexive", "euler_cy3", "face_fan", "fermat_group",
    "hermite_normal_form", "hodge_h11", "hodge_h21", "hull", "is_reflexive", "lattice_points",
    "lattice_quotient", "mirror_report", "mpcp_fan", "normal_fan", "normal_form",
    "normalized_volume", "polar_dual", "regular_fine_triangulation", "smith_normal_form",
    "verify_regularity", "weighted_simplex",
]
