"""Seeded random elements for the property suites."""

from __future__ import annotations

import random

from ..algebroid.extract import lie_algebroid_of
from ..symcore import Chart, ChartFunction
from .elements import GradedFunElement, GradedVFElement, MultVectorField, as_presentation

COEFF_RANGE = (-3, 3)
SAMPLE_DEGREE = 3


class Sampler:
    """Integer coefficients in [-3, 3] over degree-<=3 window bases.

    Multiplicative functions and fields are random combinations of exact
    window bases, so every sample satisfies its membership predicate.
    """

    def __init__(self, G, seed: int = 0, degree: int = SAMPLE_DEGREE):
        self.P = as_presentation(G)
        self.A = lie_algebroid_of(self.P)
        self.rng = random.Random(seed)
        self.degree = degree

    def _coeff(self) -> int:
        return self.rng.randint(*COEFF_RANGE)

    def _combo(self, basis, zero):
        out = zero
        for b in basis:
            c = self._coeff()
            if c:
                out = out + b * c
        return out

    def function_on(self, chart: Chart, degree: int | None = None) -> ChartFunction:
        d = self.degree if degree is None else degree
        terms = {}
        for m in chart.monomial_basis(d):
            c = self._coeff()
            if c:
                terms[m] = chart.field(c)
        return ChartFunction(chart, terms)

    def function(self) -> ChartFunction:
        return self.function_on(self.P.M)

    def invariant_function(self) -> ChartFunction:
        from ..cohomology.windows import invariant_function_basis
        return self._combo(invariant_function_basis(self.P, self.degree), self.P.M.zero())

    def mult_function(self):
        """delta f plus a combination of the multiplicative window basis."""
        from ..cohomology.windows import multiplicative_function_basis
        F = self.P.coboundary(self.function())
        return self._combo(multiplicative_function_basis(self.P, self.degree), F)

    def section(self):
        return self.A.section([self.function() for _ in range(self.A.rank)])

    def mult_field(self) -> MultVectorField:
        from ..cohomology.windows import multiplicative_field_basis
        basis = multiplicative_field_basis(self.P, self.degree)
        out = MultVectorField.zero(self.P)
        for b in basis:
            c = self._coeff()
            if c:
                out = out + b.scale(c)
        return out

    def vf_element(self) -> GradedVFElement:
        return GradedVFElement(self.section(), self.mult_field())

    def fun_element(self) -> GradedFunElement:
        return GradedFunElement(self.function(), self.mult_function())
