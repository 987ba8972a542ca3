"""Elements of C_m(G) and X_m(G)."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebroid.core import AlgebroidPresentation, AlgebroidSection
from ..algebroid.extract import lie_algebroid_of
from ..groupoid import (DiscreteActionGroupoid, GroupoidPresentation, is_multiplicative_function,
                        is_multiplicative_vector_field, presentation_of)
from ..symcore import ChartError, ChartFunction, SpaceField, SpaceFunction, VectorField


def as_presentation(G) -> GroupoidPresentation:
    if isinstance(G, (str, DiscreteActionGroupoid)):
        return presentation_of(G)
    return G


class MultVectorField:
    """A vector field X on the arrows with its base field X_M."""

    __slots__ = ("groupoid", "X", "XM")

    def __init__(self, groupoid: GroupoidPresentation, X: SpaceField, XM: VectorField):
        if X.space != groupoid.G:
            raise ChartError("X must live on the arrow space")
        if XM.chart != groupoid.M:
            raise ChartError("X_M must live on the base chart")
        self.groupoid = groupoid
        self.X = X
        self.XM = XM

    @classmethod
    def zero(cls, P: GroupoidPresentation) -> "MultVectorField":
        return cls(P, P.G.zero_field(), VectorField.zero(P.M))

    @classmethod
    def lift(cls, P: GroupoidPresentation, XM: VectorField) -> "MultVectorField":
        """Same field on every arrow component (action groupoids and unit groupoids)."""
        return cls(P, P.G.field([XM for _ in P.G.charts]), XM)

    def verdict(self):
        return is_multiplicative_vector_field(self.groupoid, self.X, self.XM)

    def bracket(self, other: "MultVectorField") -> "MultVectorField":
        return MultVectorField(self.groupoid, self.X.bracket(other.X), self.XM.bracket(other.XM))

    def __add__(self, other):
        return MultVectorField(self.groupoid, self.X + other.X, self.XM + other.XM)

    def __sub__(self, other):
        return MultVectorField(self.groupoid, self.X - other.X, self.XM - other.XM)

    def __neg__(self):
        return MultVectorField(self.groupoid, -self.X, -self.XM)

    def scale(self, c) -> "MultVectorField":
        return MultVectorField(self.groupoid, self.X * c, self.XM * c)

    def is_zero(self) -> bool:
        return self.X.is_zero() and self.XM.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, MultVectorField) and self.X == other.X and self.XM == other.XM)

    def __hash__(self):
        return hash((self.X, self.XM))

    def __str__(self):
        return f"({self.X}; base {self.XM})"

    def __repr__(self):
        return f"MultVectorField{self}"


@dataclass(frozen=True)
class GradedFunElement:
    """(f, F) with f on M in degree 0 and F multiplicative on G in degree 1."""
    f: ChartFunction
    F: SpaceFunction

    def __add__(self, other):
        return GradedFunElement(self.f + other.f, self.F + other.F)

    def __sub__(self, other):
        return GradedFunElement(self.f - other.f, self.F - other.F)

    def is_zero(self) -> bool:
        return not self.f and self.F.is_zero()

    def part(self, degree: int):
        return {0: self.f, 1: self.F}[degree]


@dataclass(frozen=True)
class GradedVFElement:
    """(alpha, X) with alpha a section of A in degree -1 and X multiplicative in degree 0."""
    alpha: AlgebroidSection
    X: MultVectorField

    def __add__(self, other):
        return GradedVFElement(self.alpha + other.alpha, self.X + other.X)

    def __sub__(self, other):
        return GradedVFElement(self.alpha - other.alpha, self.X - other.X)

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.X.is_zero()

    def part(self, degree: int):
        return {-1: self.alpha, 0: self.X}[degree]


def algebroid(G) -> AlgebroidPresentation:
    return lie_algebroid_of(as_presentation(G))


def fun_element(G, f=None, F=None, check: bool = True) -> GradedFunElement:
    P = as_presentation(G)
    f = P.M.zero() if f is None else P.on_M(f).only
    F = P.G.zero() if F is None else P.G.function(F)
    if check:
        v = is_multiplicative_function(P, F)
        if not v:
            raise ChartError(f"degree-1 part is not multiplicative: {v.certificate[:1]}")
    return GradedFunElement(f, F)


def vf_element(G, alpha: AlgebroidSection | None = None, X: MultVectorField | None = None,
               check: bool = True) -> GradedVFElement:
    P = as_presentation(G)
    A = lie_algebroid_of(P)
    alpha = A.zero_section() if alpha is None else alpha
    X = MultVectorField.zero(P) if X is None else X
    if check:
        v = X.verdict()
        if not v:
            raise ChartError(f"degree-0 part is not multiplicative: {v.certificate[:1]}")
    return GradedVFElement(alpha, X)
