"""Exact weight combinatorics for magic windows, Schur functors, Borel-Weil-Bott,
Lascoux resolutions and the graded Rickard complex of the Grassmannian flop."""

from .bwb import BwbResult, GrWeight, euler_characteristic, euler_characteristic_localized
from .characters import SymLaurentPoly, decompose_into_schur, schur_polynomial, weight_multiset
from .graderestrict import GammaSpec, WeightRange, eta, gamma_weight_range, grade_restriction_check
from .lascoux import LascouxSetup, LascouxTerm, lascoux_terms, main_theorem_terms, resolution_I
from .qpoly import QPolynomial, gaussian_binomial
from .rickard import betti, cancellation_matching, copies_of_term, poincare_centered, sl2_composition, term_catalog
from .tensorcalc import decompose_wedge_gl, exterior_power_hom, exterior_power_sum, lr_coefficients
from .weights import conjugate, enumerate_dominant_in_interval, enumerate_in_box
from .windows import (
    WindowSpec,
    adjunction_shift,
    in_window,
    kernel_descriptor,
    magic_generators,
    shift_window_by_det,
    window_interval,
)

__version__ = "0.1.0"

__all__ = [
    "BwbResult", "GrWeight", "euler_characteristic", "euler_characteristic_localized",
    "SymLaurentPoly", "decompose_into_schur", "schur_polynomial", "weight_multiset",
    "GammaSpec", "WeightRange", "eta", "gamma_weight_range", "grade_restriction_check",
    "LascouxSetup", "LascouxTerm", "lascoux_terms", "main_theorem_terms", "resolution_I",
    "QPolynomial", "gaussian_binomial",
    "betti", "cancellation_matching", "copies_of_term", "poincare_centered", "sl2_composition", "term_catalog",
    "decompose_wedge_gl", "exterior_power_hom", "exterior_power_sum", "lr_coefficients",
    "conjugate", "enumerate_dominant_in_interval", "enumerate_in_box",
    "WindowSpec", "adjunction_shift", "in_window", "kernel_descriptor", "magic_generators",
    "shift_window_by_det", "window_interval",
]
