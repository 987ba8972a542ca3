"""Degree windows, exact linear algebra and the cohomology-level checks."""

from .linalg import Echelon, kernel, obstruction, quotient, rank, solve
from .groupoid_windows import (DegreeWindow, DerivationDecision, anchor_map_Lbar, degree_window,
                               derivation_solver, h_minus_one, invariant_fields, invariant_functions,
                               lbar_rank_data, proper_crosscheck)
from .algebroid_windows import (algebroid_window, class_is_nonzero, derivation_window,
                                im_cocycle_window, molino_analysis, vanest_window_check,
                                SOURCE_SIMPLY_CONNECTED)
from .lierinehart import lie_rinehart_check
from .morita import (MORITA_PAIRS, GroupoidMorphism, identity_morphism, morita_compare,
                     projectable_window, submersion_to_unit)
from .report import PROPER, algebroid_report, cohomology_report, report_for

__all__ = [
    "Echelon", "kernel", "obstruction", "quotient", "rank", "solve",
    "DegreeWindow", "DerivationDecision", "anchor_map_Lbar", "degree_window", "derivation_solver",
    "h_minus_one", "invariant_fields", "invariant_functions", "lbar_rank_data", "proper_crosscheck",
    "algebroid_window", "class_is_nonzero", "derivation_window", "im_cocycle_window",
    "molino_analysis", "vanest_window_check", "SOURCE_SIMPLY_CONNECTED", "lie_rinehart_check",
    "MORITA_PAIRS", "GroupoidMorphism", "identity_morphism", "morita_compare", "projectable_window",
    "submersion_to_unit", "PROPER", "algebroid_report", "cohomology_report", "report_for",
]
