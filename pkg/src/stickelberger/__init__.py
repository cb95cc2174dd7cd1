"""
Mazur-Tate elements of elliptic curves and the relations they satisfy.
"""

from .theta import ThetaElement, half_sum, s_m_set, theta, theta_central, theta_scalar
from .orientation import ORIENTATIONS, OrientationRegistry, Pin
from .relations import (
    RelationReport,
    Verdict,
    check_character_determination,
    check_functional_equation,
    check_mazur_tate,
    check_norm_bad,
    check_norm_coprime,
    check_norm_dividing,
    check_norm_layer,
    check_parity,
    check_vanishing_bound,
    pin_default_orientations,
)

__all__ = [
    "ThetaElement",
    "half_sum",
    "s_m_set",
    "theta",
    "theta_central",
    "theta_scalar",
    "ORIENTATIONS",
    "OrientationRegistry",
    "Pin",
    "RelationReport",
    "Verdict",
    "check_character_determination",
    "check_functional_equation",
    "check_mazur_tate",
    "check_norm_bad",
    "check_norm_coprime",
    "check_norm_dividing",
    "check_norm_layer",
    "check_parity",
    "check_vanishing_bound",
    "pin_default_orientations",
]
