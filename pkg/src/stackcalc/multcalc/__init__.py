"""The complex C_m(G), the dgla X_m(G) and the action of one on the other."""

from .elements import (GradedFunElement, GradedVFElement, MultVectorField, algebroid,
                       as_presentation, fun_element, vf_element)
from .ops import (ClassProduct, bracket2, bracket_field_section, bullet, cm0_action, degree_of,
                  delta, differential_fun, differential_vf, h_cdot, mu, partial)

__all__ = [
    "GradedFunElement", "GradedVFElement", "MultVectorField", "algebroid", "as_presentation",
    "fun_element", "vf_element", "ClassProduct", "bracket2", "bracket_field_section", "bullet",
    "cm0_action", "degree_of", "delta", "differential_fun", "differential_vf", "h_cdot", "mu",
    "partial",
]
