"""
Finite abelian Galois groups G_M = (Z/M)*/{+-1} and their group rings.

Augmentation-ideal filtration with exact lattice membership, the
involution, projections and complex characters.
"""

from .snf import SmithForm, smith_normal_form
from .group import AbelianGroup, GaloisGroup, galois_group
from .element import (
    CoefficientRing,
    INTEGERS,
    RATIONALS,
    Z_HALF,
    localization,
    ring_from_name,
    GroupRingElement,
    parse_dump,
    sigma,
    project,
    corestriction,
    involution,
    multiply_by_group_element,
)
from .lattice import Lattice
from .filtration import (
    OrdKind,
    OrdResult,
    AugmentationFiltration,
    filtration_for,
    in_power,
    augmentation_order,
)
from .characters import (
    CharacterValue,
    characters,
    evaluate,
    character_table,
    orthogonality_defect,
    conductor,
    is_primitive,
    fourier_inverse,
)

__all__ = [
    "SmithForm",
    "smith_normal_form",
    "AbelianGroup",
    "GaloisGroup",
    "galois_group",
    "CoefficientRing",
    "INTEGERS",
    "RATIONALS",
    "Z_HALF",
    "localization",
    "ring_from_name",
    "GroupRingElement",
    "parse_dump",
    "sigma",
    "project",
    "corestriction",
    "involution",
    "multiply_by_group_element",
    "Lattice",
    "OrdKind",
    "OrdResult",
    "AugmentationFiltration",
    "filtration_for",
    "in_power",
    "augmentation_order",
    "CharacterValue",
    "characters",
    "evaluate",
    "character_table",
    "orthogonality_defect",
    "conductor",
    "is_primitive",
    "fourier_inverse",
]
