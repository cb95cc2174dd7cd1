"""
Modular symbols for Gamma_0(N) and the rational period map of a curve.
"""

from .p1 import ManinSymbol, P1List, p1_normalize, p1_reduce
from .space import ModularSymbolSpace, QuotientPresentation, build_space
from .heilbronn import hecke_matrix, hecke_rows, merel
from .paths import (
    convergents,
    fricke,
    fricke_image,
    fricke_matrix,
    hecke_matrix_by_paths,
    lift_to_sl2,
    path_from_infinity,
    path_segments,
    path_symbols,
    symbol_endpoints,
)
from .period_map import (
    RationalPeriodMap,
    cut_eigenspace,
    dump_period_map,
    fricke_eigenvalue,
    hecke_eigenvalue,
    load_period_map,
    period_map_for,
    period_map_path,
    symbol_value,
)

__all__ = [
    "ManinSymbol",
    "P1List",
    "p1_normalize",
    "p1_reduce",
    "ModularSymbolSpace",
    "QuotientPresentation",
    "build_space",
    "hecke_matrix",
    "hecke_rows",
    "merel",
    "convergents",
    "fricke",
    "fricke_image",
    "fricke_matrix",
    "hecke_matrix_by_paths",
    "lift_to_sl2",
    "path_from_infinity",
    "path_segments",
    "path_symbols",
    "symbol_endpoints",
    "RationalPeriodMap",
    "cut_eigenspace",
    "dump_period_map",
    "fricke_eigenvalue",
    "hecke_eigenvalue",
    "load_period_map",
    "period_map_for",
    "period_map_path",
    "symbol_value",
]
