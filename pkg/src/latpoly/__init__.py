"""Exact lattice-point geometry of polytopes and zonotopes.

Ehrhart polynomials by exact counting, successive minima from an exact
rational LP, zonotope coefficient formulas, lattice-face checks and the
elementary symmetric bounds on Ehrhart coefficients.
"""
from .conjecture import (BoundReport, coefficient_report, conjecture_floor_bound, l_bound, sigma,
                         sigma_of_polytope)
from .lattice_face import LatticeFaceReport, check_lattice_face, verify_liu
from .minima import MinimaResult, successive_minima
from .polytopes import EhrhartPoly, VPolytope, count_lattice_points, ehrhart
from .qfamily import q_family, q_family_ehrhart_closed
from .zonotopes import Zonotope, as_vpolytope, ehrhart_stanley

__all__ = [
    "BoundReport", "EhrhartPoly", "LatticeFaceReport", "MinimaResult", "VPolytope", "Zonotope",
    "as_vpolytope", "check_lattice_face", "coefficient_report", "conjecture_floor_bound",
    "count_lattice_points", "ehrhart", "ehrhart_stanley", "l_bound", "q_family",
    "q_family_ehrhart_closed", "sigma", "sigma_of_polytope", "successive_minima", "verify_liu",
]
__version__ = "0.1.0"
