"""
Analytic side: Dirichlet characters, Gauss sums and twisted L-values, used
as an independent oracle for the character values of Mazur-Tate elements.
"""

from .dirichlet import DirichletCharacter, gauss_sum
from .series import LSeriesContext, l_value_twisted, truncation_length
from .special import PAIRINGS, SpecialValueReport, SpecialValueRow, check_special_values

__all__ = [
    "DirichletCharacter",
    "gauss_sum",
    "LSeriesContext",
    "l_value_twisted",
    "truncation_length",
    "PAIRINGS",
    "SpecialValueReport",
    "SpecialValueRow",
    "check_special_values",
]
