"""The category C(M) x| C_m(G) and its match with natural transformations."""

from __future__ import annotations

from dataclasses import dataclass

from ..symcore import ChartFunction, SpaceFunction
from .action import DiscreteActionGroupoid
from .presentation import GroupoidPresentation, PresentationError


@dataclass(frozen=True)
class HomMorphism:
    """f : F => F + delta f, stored as the pair (f, F)."""
    f: ChartFunction
    F: SpaceFunction

    def __str__(self):
        return f"({self.f}, {self.F})"


def _pres(G) -> GroupoidPresentation:
    return G.to_presentation() if isinstance(G, DiscreteActionGroupoid) else G


def morphism(G, f, F) -> HomMorphism:
    P = _pres(G)
    return HomMorphism(P.on_M(f).only, P.G.function(F))


def source(mor: HomMorphism) -> SpaceFunction:
    return mor.F


def target(G, mor: HomMorphism) -> SpaceFunction:
    return mor.F + _pres(G).coboundary(mor.f)


def identity(G, F) -> HomMorphism:
    P = _pres(G)
    return HomMorphism(P.M.zero(), P.G.function(F))


def compose_hom_category(G, first: HomMorphism, second: HomMorphism) -> HomMorphism:
    """second o first = (f + f', F), defined when F' = F + delta f."""
    gap = second.F - target(G, first)
    if not gap.is_zero():
        raise PresentationError(f"morphisms are not composable: source of the second minus "
                                f"target of the first is {gap}")
    return HomMorphism(first.f + second.f, first.F)


def naturality_defect(G, F: SpaceFunction, f: ChartFunction, F2: SpaceFunction) -> SpaceFunction:
    """F2 - F - (t^*f - s^*f): zero iff f is a natural transformation F => F2."""
    P = _pres(G)
    return F2 - F - (P.t_pull(f) - P.s_pull(f))


def compose_natural(f: ChartFunction, f2: ChartFunction) -> ChartFunction:
    """Vertical composition of natural transformations into the abelian group R."""
    return f + f2
