"""Multiplicativity predicates with certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..symcore import ChartError, ChartFunction, SpaceField, SpaceFunction, VectorField
from .action import DiscreteActionGroupoid
from .presentation import GroupoidPresentation


@dataclass
class Verdict:
    """Boolean answer plus the offending nonzero normal forms when false."""
    value: bool
    certificate: list = field(default_factory=list)

    def __bool__(self):
        return self.value

    def to_dict(self) -> dict:
        return {"value": self.value, "certificate": [list(map(str, c)) for c in self.certificate]}


def _presentation(G) -> GroupoidPresentation:
    return G.to_presentation() if isinstance(G, DiscreteActionGroupoid) else G


def multiplicativity_defect(G, F) -> SpaceFunction:
    """m^*F - pr1^*F - pr2^*F on G2."""
    P = _presentation(G)
    P.require("G2", "m", "pr1", "pr2")
    F = P.G.function(F)
    return P.m.pullback(F) - P.pr1.pullback(F) - P.pr2.pullback(F)


def is_multiplicative_function(G, F) -> Verdict:
    """F(gh) = F(g) + F(h).  For an action groupoid F may be given per element."""
    if isinstance(G, DiscreteActionGroupoid) and isinstance(F, Mapping):
        if set(F) != set(G.elements):
            raise ChartError("cocycle data must give one function per group element")
        bad = G.cocycle_defects(F)
        return Verdict(not bad, bad)
    d = multiplicativity_defect(G, F)
    if d.is_zero():
        return Verdict(True)
    P = _presentation(G)
    return Verdict(False, [(lab, p) for lab, p in zip(P.G2.labels, d.parts) if not p.is_zero()])


def is_multiplicative_vector_field(G, X, XM: VectorField | None = None) -> Verdict:
    """X is s- and t-related to X_M and (X, X) on G2 is pr1-, pr2- and m-related to X.

    For an action groupoid a bare VectorField on M may be passed; it is
    lifted to every arrow component.
    """
    if isinstance(G, DiscreteActionGroupoid) and isinstance(X, VectorField) and XM is None:
        X, XM = G.lift_field(X)
    if XM is None:
        raise ChartError("base field X_M is required")
    P = _presentation(G)
    X = P.G.field(X)
    if XM.chart != P.M:
        raise ChartError("X_M must live on the base chart")
    Xm = P.Mspace.field(XM)
    cert = []
    for label, mp in (("s", P.s), ("t", P.t)):
        for comp, gen, d in mp.relatedness_defects(X, Xm):
            cert.append((f"{label}-related", comp, gen, d))
    if cert:
        return Verdict(False, cert)
    XX = P.pair_field(X, X)
    for label, mp in (("pr1", P.pr1), ("pr2", P.pr2), ("m", P.m)):
        for comp, gen, d in mp.relatedness_defects(XX, X):
            cert.append((f"{label}-related", comp, gen, d))
    return Verdict(not cert, cert)


def is_right_invariant(G, Y: SpaceField) -> Verdict:
    """Y is s-related to 0 and (Y, 0) on G2 is m-related to Y."""
    P = _presentation(G)
    zero_M = P.Mspace.zero_field()
    cert = [("s-related", c, g, d) for c, g, d in P.s.relatedness_defects(Y, zero_M)]
    if not cert:
        W = P.pair_field(Y, P.G.zero_field())
        cert = [("m-related", c, g, d) for c, g, d in P.m.relatedness_defects(W, Y)]
    return Verdict(not cert, cert)
