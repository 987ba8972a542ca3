"""Lie algebroids: extraction, the complexes C_m(A) and X_m(A), and the Van-Est maps."""

from .core import (AlgebroidDerivation, AlgebroidError, AlgebroidPresentation, AlgebroidSection,
                   IMFunction)
from .extract import (left_invariant, lie_algebroid_of, molino_algebroid, restrict_section,
                      right_invariant)
from .ops import (AlgebroidFunElement, AlgebroidVFElement, ClassProduct, ad_differential,
                  dA_differential, derivation_on_im, dgla_A_bracket, fun_element, h_ocdot,
                  im_times_section, mu_bar, obullet, vf_element)
from .vanest import VE, derivation_of_field, im_function_of, oVE, verify_vanest_square

__all__ = [
    "AlgebroidDerivation", "AlgebroidError", "AlgebroidPresentation", "AlgebroidSection",
    "IMFunction", "left_invariant", "lie_algebroid_of", "molino_algebroid", "restrict_section",
    "right_invariant", "AlgebroidFunElement", "AlgebroidVFElement", "ClassProduct",
    "ad_differential", "dA_differential", "derivation_on_im", "dgla_A_bracket", "fun_element",
    "h_ocdot", "im_times_section", "mu_bar", "obullet", "vf_element",
    "VE", "derivation_of_field", "im_function_of", "oVE", "verify_vanest_square",
]
