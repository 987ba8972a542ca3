"""Differentials, the bullet operation, the module action and the bracket of X_m(G)."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebroid.core import AlgebroidError, AlgebroidSection
from ..algebroid.extract import left_invariant, restrict_section, right_invariant
from ..groupoid import is_multiplicative_function
from ..symcore import ChartError, ChartFunction, SpaceFunction, VectorField
from .elements import (GradedFunElement, GradedVFElement, MultVectorField, as_presentation)


def delta(G, f) -> SpaceFunction:
    """t^*f - s^*f."""
    P = as_presentation(G)
    return P.coboundary(f)


def partial(alpha: AlgebroidSection) -> MultVectorField:
    """alpha^r - alpha^l, over the base field a(alpha)."""
    A = alpha.algebroid
    if A.groupoid is None:
        raise AlgebroidError("partial needs an algebroid extracted from a groupoid")
    X = right_invariant(alpha) - left_invariant(alpha)
    return MultVectorField(A.groupoid, X, A.anchor(alpha))


def degree_of(x) -> int:
    if isinstance(x, AlgebroidSection):
        return -1
    if isinstance(x, MultVectorField):
        return 0
    if isinstance(x, ChartFunction):
        return 0
    if isinstance(x, SpaceFunction):
        return 1
    raise TypeError(f"not a homogeneous element: {type(x).__name__}")


def bullet(x, y):
    """Homogeneous x . y.  Returns None when the result lies in a zero degree."""
    if isinstance(x, MultVectorField):
        if isinstance(y, ChartFunction):
            return x.XM.apply(y)
        if isinstance(y, SpaceFunction):
            return x.X.apply(y)
    elif isinstance(x, AlgebroidSection):
        if isinstance(y, ChartFunction):
            return None
        if isinstance(y, SpaceFunction):
            P = x.algebroid.groupoid
            return P.u_pull(right_invariant(x).apply(y))
    raise ChartError(f"bullet: unsupported operands {type(x).__name__}, {type(y).__name__}")


def mu(x: GradedVFElement, y: GradedFunElement) -> GradedFunElement:
    """(alpha . F + X . f, X . F)."""
    return GradedFunElement(bullet(x.alpha, y.F) + bullet(x.X, y.f), bullet(x.X, y.F))


def bracket_field_section(X: MultVectorField, alpha: AlgebroidSection) -> AlgebroidSection:
    """[[X, alpha]] = [X, alpha^r]|_M."""
    return restrict_section(alpha.algebroid, X.X.bracket(right_invariant(alpha)))


def bracket2(x, y):
    """Graded bracket of X_m(G), on homogeneous parts or on full elements."""
    if isinstance(x, GradedVFElement) and isinstance(y, GradedVFElement):
        return GradedVFElement(bracket_field_section(x.X, y.alpha)
                               - bracket_field_section(y.X, x.alpha), x.X.bracket(y.X))
    if isinstance(x, MultVectorField) and isinstance(y, MultVectorField):
        return x.bracket(y)
    if isinstance(x, MultVectorField) and isinstance(y, AlgebroidSection):
        return bracket_field_section(x, y)
    if isinstance(x, AlgebroidSection) and isinstance(y, MultVectorField):
        return -bracket_field_section(y, x)
    if isinstance(x, AlgebroidSection) and isinstance(y, AlgebroidSection):
        return None
    raise ChartError("bracket2: unsupported operands")


def differential_vf(x: GradedVFElement) -> GradedVFElement:
    A = x.alpha.algebroid
    return GradedVFElement(A.zero_section(), partial(x.alpha))


def differential_fun(G, y: GradedFunElement) -> GradedFunElement:
    P = as_presentation(G)
    return GradedFunElement(P.M.zero(), delta(P, y.f))


def cm0_action(G, f: ChartFunction, x: GradedVFElement) -> GradedVFElement:
    """f (alpha, X) = (f alpha, (t^*f) X) for an invariant f."""
    P = as_presentation(G)
    if not delta(P, f).is_zero():
        raise ChartError(f"{f} is not invariant: delta f = {delta(P, f)}")
    X = MultVectorField(P, x.X.X * P.t_pull(f), x.X.XM * f)
    return GradedVFElement(x.alpha * f, X)


@dataclass
class ClassProduct:
    representative: object
    degree: int
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def h_cdot(G, y, x) -> ClassProduct:
    """Cohomology action of C_m(G) on X_m(G) computed on representatives.

    [F].[alpha] = [F alpha^r], [f].[X] = [(t^*f) X], [f].[alpha] = [f alpha],
    [F].[X] = 0.  The preconditions and the multiplicativity of the result
    are verified and returned as checks.
    """
    P = as_presentation(G)
    if isinstance(y, SpaceFunction) and isinstance(x, AlgebroidSection):
        # alpha in ker partial makes alpha^r = alpha^l vertical for s and t
        rep = MultVectorField(P, right_invariant(x) * y, VectorField.zero(P.M))
        checks = {"F multiplicative": bool(is_multiplicative_function(P, y)),
                  "partial alpha = 0": partial(x).is_zero(),
                  "F alpha^r multiplicative": bool(rep.verdict())}
        return ClassProduct(rep, 0, checks)
    if isinstance(y, ChartFunction) and isinstance(x, MultVectorField):
        invariant = delta(P, y).is_zero()
        rep = MultVectorField(P, x.X * P.t_pull(y), x.XM * y)
        checks = {"delta f = 0": invariant, "X multiplicative": bool(x.verdict()),
                  "(t^*f) X multiplicative": bool(rep.verdict())}
        return ClassProduct(rep, 0, checks)
    if isinstance(y, ChartFunction) and isinstance(x, AlgebroidSection):
        checks = {"delta f = 0": delta(P, y).is_zero(), "partial alpha = 0": partial(x).is_zero()}
        return ClassProduct(x * y, -1, checks)
    if isinstance(y, SpaceFunction) and isinstance(x, MultVectorField):
        return ClassProduct(None, 1, {"F multiplicative": bool(is_multiplicative_function(P, y))})
    raise ChartError("h_cdot: unsupported operands")

