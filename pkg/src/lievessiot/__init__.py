"""Exact symbolic toolkit for automorphic differential systems on matrix
groups and their homogeneous spaces: Gaussian-rational scalars, the
differential field C(t), exact matrix algebra, logarithmic derivatives
and gauge transformations, matrix Riccati and flag systems with their
triangularizing reductions, the Darboux SO(3) chart, and Weierstrass
elliptic quadratures.
"""

from .scalars import GaussianRational, gq
from .ratfunc import (Poly, RatFunc, check_exponential_solution,
                      check_integral_solution)
from .matrix import MatK
from .automorphic import (AutomorphicField, GroupElement, adjoint,
                          check_automorphic_solution, gauge_transform,
                          is_in_subalgebra, log_deriv)
from .homspace import (FlagCoords, FlagSystem, PlaneCoords, RiccatiSystem,
                       flag_check_solution, flag_coords, flag_generate,
                       flag_rhs, flag_to_grassmann, plucker_coords,
                       reduce_by_flag, reduce_by_plane,
                       riccati_check_solution, riccati_generate, riccati_rhs)
from .darboux import (SO3Field, SpherePoint, rotation_to_moebius,
                      sl2_to_riccati, so3_algebra_to_sl2,
                      so3_pushforward_check, so3_to_riccati,
                      sphere_from_symmetric, symmetric_coords)
from .elliptic import (CurvePoint, PendulumParams, WeierstrassCurve,
                       chord_tangent_add, check_weierstrass_solution,
                       invariant_field_check, on_curve, paper_addition,
                       pendulum_normal_form)
from .parsing import format_canonical, parse_matrix, parse_ratfunc

__all__ = [
    "GaussianRational", "gq", "Poly", "RatFunc",
    "check_integral_solution", "check_exponential_solution",
    "MatK",
    "AutomorphicField", "GroupElement", "log_deriv", "adjoint",
    "gauge_transform", "check_automorphic_solution", "is_in_subalgebra",
    "PlaneCoords", "FlagCoords", "RiccatiSystem", "FlagSystem",
    "riccati_generate", "riccati_rhs", "riccati_check_solution",
    "plucker_coords", "flag_coords", "flag_generate", "flag_rhs",
    "flag_check_solution", "flag_to_grassmann",
    "reduce_by_plane", "reduce_by_flag",
    "SO3Field", "SpherePoint", "so3_to_riccati", "symmetric_coords",
    "sphere_from_symmetric", "so3_pushforward_check",
    "rotation_to_moebius", "so3_algebra_to_sl2", "sl2_to_riccati",
    "WeierstrassCurve", "CurvePoint", "PendulumParams", "on_curve",
    "chord_tangent_add", "paper_addition", "check_weierstrass_solution",
    "invariant_field_check", "pendulum_normal_form",
    "parse_ratfunc", "parse_matrix", "format_canonical",
]
