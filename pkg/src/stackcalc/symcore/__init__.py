"""Exact scalars, chart function rings, substitution maps and vector fields."""

from .scalars import QQ_FIELD, ScalarField, scalar_field
from .chart import Chart, ChartError, ChartFunction, normalize, normalize_symbols
from .expr import ExprError, function_to_prefix, parse_function
from .maps import MapError, SmoothMap, identity_map
from .fields import VectorField, partial, relatedness_defects
from .spaces import Space, SpaceField, SpaceFunction, SpaceMap

__all__ = [
    "QQ_FIELD", "ScalarField", "scalar_field",
    "Chart", "ChartError", "ChartFunction", "normalize", "normalize_symbols",
    "ExprError", "function_to_prefix", "parse_function",
    "MapError", "SmoothMap", "identity_map",
    "VectorField", "partial", "relatedness_defects",
    "Space", "SpaceField", "SpaceFunction", "SpaceMap",
]
