"""The complexes C_m(A), X_m(A), the action of X_m(A) on C_m(A) and its cohomology products."""

from __future__ import annotations

from dataclasses import dataclass

from ..symcore import ChartFunction, VectorField
from .core import (AlgebroidDerivation, AlgebroidError, AlgebroidPresentation, AlgebroidSection,
                   IMFunction)


@dataclass(frozen=True)
class AlgebroidFunElement:
    """(f, omega): f in degree 0, omega an IM function in degree 1."""
    f: ChartFunction
    omega: IMFunction

    def __add__(self, other):
        return AlgebroidFunElement(self.f + other.f, self.omega + other.omega)

    def __sub__(self, other):
        return AlgebroidFunElement(self.f - other.f, self.omega - other.omega)

    def is_zero(self) -> bool:
        return not self.f and self.omega.is_zero()

    def part(self, degree: int):
        return {0: self.f, 1: self.omega}[degree]


@dataclass(frozen=True)
class AlgebroidVFElement:
    """(alpha, D): a section in degree -1, a derivation in degree 0."""
    alpha: AlgebroidSection
    D: AlgebroidDerivation

    def __add__(self, other):
        return AlgebroidVFElement(self.alpha + other.alpha, self.D + other.D)

    def __sub__(self, other):
        return AlgebroidVFElement(self.alpha - other.alpha, self.D - other.D)

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.D.is_zero()

    def part(self, degree: int):
        return {-1: self.alpha, 0: self.D}[degree]


def fun_element(A: AlgebroidPresentation, f=None, omega: IMFunction | None = None) -> AlgebroidFunElement:
    f = A.M.zero() if f is None else (f if isinstance(f, ChartFunction) else A.M.const(f))
    return AlgebroidFunElement(f, omega if omega is not None else A.zero_im_function())


def vf_element(A: AlgebroidPresentation, alpha: AlgebroidSection | None = None,
               D: AlgebroidDerivation | None = None) -> AlgebroidVFElement:
    return AlgebroidVFElement(alpha if alpha is not None else A.zero_section(),
                              D if D is not None else A.zero_derivation())


# -- homogeneous operations ------------------------------------------------

def derivation_on_im(D: AlgebroidDerivation, omega: IMFunction) -> IMFunction:
    """D o omega = L_sigma o omega - omega o D, evaluated on the frame."""
    A = D.algebroid
    vals = [D.symbol.apply(w) - omega(D.values[k]) for k, w in enumerate(omega.values)]
    return IMFunction(A, vals)


def obullet(x, y):
    """Homogeneous action of X_m(A) on C_m(A)."""
    if isinstance(x, AlgebroidSection):
        if isinstance(y, IMFunction):
            return y(x)
        if isinstance(y, ChartFunction):
            return None  # alpha o f = 0 lies in degree -1, which is zero
    elif isinstance(x, AlgebroidDerivation):
        if isinstance(y, IMFunction):
            return derivation_on_im(x, y)
        if isinstance(y, ChartFunction):
            return x.symbol.apply(y)
    raise AlgebroidError(f"obullet: unsupported operands {type(x).__name__}, {type(y).__name__}")


def mu_bar(x: AlgebroidVFElement, y: AlgebroidFunElement) -> AlgebroidFunElement:
    """(alpha o omega + D o f, D o omega)."""
    return AlgebroidFunElement(y.omega(x.alpha) + x.D.symbol.apply(y.f),
                               derivation_on_im(x.D, y.omega))


def dgla_A_bracket(x: AlgebroidVFElement, y: AlgebroidVFElement) -> AlgebroidVFElement:
    """[(alpha, D), (beta, E)] = (D(beta) - E(alpha), [D, E]); sections bracket to zero."""
    return AlgebroidVFElement(x.D(y.alpha) - y.D(x.alpha), x.D.commutator(y.D))


def ad_differential(x: AlgebroidVFElement) -> AlgebroidVFElement:
    A = x.alpha.algebroid
    return AlgebroidVFElement(A.zero_section(), A.ad(x.alpha))


def dA_differential(y: AlgebroidFunElement) -> AlgebroidFunElement:
    A = y.omega.algebroid
    return AlgebroidFunElement(A.M.zero(), A.dA(y.f))


def im_times_section(omega: IMFunction, alpha: AlgebroidSection) -> AlgebroidDerivation:
    """omega alpha: beta -> omega(beta) alpha, with zero symbol."""
    A = omega.algebroid
    return AlgebroidDerivation(A, VectorField.zero(A.M), [alpha * w for w in omega.values])


@dataclass
class ClassProduct:
    """Result of a cohomology-level product with the checks that justify it."""
    representative: object
    degree: int
    checks: dict

    @property
    def ok(self) -> bool:
        return all(v for v in self.checks.values())


def h_ocdot(y, x) -> ClassProduct:
    """[omega].[alpha] = [omega alpha], [f].[D] = [fD], [omega].[D] = 0 (and [f].[alpha] = [f alpha]).

    Preconditions are verified and reported rather than assumed.
    """
    if isinstance(y, IMFunction) and isinstance(x, AlgebroidSection):
        A = y.algebroid
        rep = im_times_section(y, x)
        checks = {"omega cocycle": y.is_cocycle(), "ad(alpha) = 0": A.ad(x).is_zero(),
                  "omega alpha is a derivation": rep.is_derivation(),
                  "symbol zero": rep.symbol.is_zero()}
        return ClassProduct(rep, 0, checks)
    if isinstance(y, ChartFunction) and isinstance(x, AlgebroidDerivation):
        A = x.algebroid
        checks = {"d_A f = 0": A.dA(y).is_zero(), "D is a derivation": x.is_derivation()}
        rep = x * y
        checks["f D is a derivation"] = rep.is_derivation()
        return ClassProduct(rep, 0, checks)
    if isinstance(y, ChartFunction) and isinstance(x, AlgebroidSection):
        A = x.algebroid
        checks = {"d_A f = 0": A.dA(y).is_zero(), "ad(alpha) = 0": A.ad(x).is_zero()}
        return ClassProduct(x * y, -1, checks)
    if isinstance(y, IMFunction) and isinstance(x, AlgebroidDerivation):
        return ClassProduct(None, 1, {"omega cocycle": y.is_cocycle()})
    raise AlgebroidError("h_ocdot: unsupported operands")
