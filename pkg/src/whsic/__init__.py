"""Weyl-Heisenberg SIC fiducials studied through their overlap tables."""

from .clifford import act_fourier, act_shift_mod, act_zauner, apply_word, parse_word
from .estimators import OverlapEncoder, SICSearch
from .heisenberg import (
    displacement,
    fourier_matrix,
    omega_matrix,
    r_matrix,
    roots,
    shift_matrix,
    zauner_matrix,
)
from .overlaps import (
    VerificationReport,
    check_conditions,
    extract_fiducial,
    frame_potential,
    overlaps_from_fiducial,
    reconstruct_L,
    reconstruct_T,
)
from .search import SearchConfig, SearchReport, sic_search
from .symbols import rank_one_criterion, symbols_from_table, table_from_symbols
from .validation import ConditionError, NotUnitError, ZeroCoordinateError

__version__ = "0.1.0"

__all__ = [
    "ConditionError",
    "NotUnitError",
    "OverlapEncoder",
    "SICSearch",
    "SearchConfig",
    "SearchReport",
    "VerificationReport",
    "ZeroCoordinateError",
    "act_fourier",
    "act_shift_mod",
    "act_zauner",
    "apply_word",
    "check_conditions",
    "displacement",
    "extract_fiducial",
    "fourier_matrix",
    "frame_potential",
    "omega_matrix",
    "overlaps_from_fiducial",
    "parse_word",
    "r_matrix",
    "rank_one_criterion",
    "reconstruct_L",
    "reconstruct_T",
    "roots",
    "shift_matrix",
    "sic_search",
    "symbols_from_table",
    "table_from_symbols",
    "zauner_matrix",
]
