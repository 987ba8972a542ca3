"""Groupoid presentations, axiom validation, multiplicativity and the gallery."""

from .presentation import (AxiomResult, GroupoidPresentation, PresentationError,
                           ValidationReport, map_defects)
from .action import DiscreteActionGroupoid
from .multiplicative import (Verdict, is_multiplicative_function, is_multiplicative_vector_field,
                             is_right_invariant, multiplicativity_defect)
from .homcat import HomMorphism, compose_hom_category, identity, morphism, naturality_defect
from .gallery import (GALLERY, build_example, circle_group, gallery_names, pair_groupoid,
                      presentation_of, real_line_group, submersion_groupoid, torus_bundle,
                      unit_groupoid, z2_reflection)

__all__ = [
    "AxiomResult", "GroupoidPresentation", "PresentationError", "ValidationReport", "map_defects",
    "DiscreteActionGroupoid", "Verdict", "is_multiplicative_function",
    "is_multiplicative_vector_field", "is_right_invariant", "multiplicativity_defect",
    "HomMorphism", "compose_hom_category", "identity", "morphism", "naturality_defect",
    "GALLERY", "build_example", "circle_group", "gallery_names", "pair_groupoid",
    "presentation_of", "real_line_group", "submersion_groupoid", "torus_bundle",
    "unit_groupoid", "z2_reflection",
]
