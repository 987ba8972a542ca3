"""The algebroid of a source-adapted groupoid and invariant vector fields."""

from __future__ import annotations

from ..groupoid import DiscreteActionGroupoid, GroupoidPresentation, presentation_of
from ..symcore import Chart, SpaceField, VectorField, scalar_field
from .core import AlgebroidError, AlgebroidPresentation, AlgebroidSection


def lie_algebroid_of(G) -> AlgebroidPresentation:
    """Frame = fiber directions along the units, anchor from dt, bracket from [e_i^r, e_j^r]|_M.

    The result is cached on the presentation.
    """
    P = presentation_of(G) if isinstance(G, (str, DiscreteActionGroupoid)) else G
    hit = P._cache.get("algebroid")
    if hit is not None:
        return hit
    P.require_source_adapted()
    frame = P.right_frame()
    M = P.M
    anchor = []
    for E in frame:
        values = {g: P.u.pullback(E.apply(P.t_pull(M.gen(g)))).only for g in M.gens}
        anchor.append(VectorField.from_derivation(M, values))
    structure = {}
    for i in range(len(frame)):
        for j in range(i + 1, len(frame)):
            structure[(i, j)] = P.restrict_to_units(frame[i].bracket(frame[j]))
    A = AlgebroidPresentation(M, P.fiber, anchor, structure, name=f"A({P.name})", groupoid=P)
    P._cache["algebroid"] = A
    return A


def _linked(A: AlgebroidPresentation) -> GroupoidPresentation:
    if A.groupoid is None:
        raise AlgebroidError(f"{A.name} is not linked to a groupoid presentation")
    return A.groupoid


def right_invariant(alpha: AlgebroidSection) -> SpaceField:
    """alpha^r = sum_j (t^* a_j) e_j^r."""
    P = _linked(alpha.algebroid)
    out = P.G.zero_field()
    for a, E in zip(alpha.coeffs, P.right_frame()):
        if a:
            out = out + E * P.t_pull(a)
    return out


def left_invariant(alpha: AlgebroidSection) -> SpaceField:
    """alpha^l = -i_* alpha^r."""
    P = _linked(alpha.algebroid)
    return -P.i.pushforward(right_invariant(alpha), P.i)


def restrict_section(A: AlgebroidPresentation, Y: SpaceField) -> AlgebroidSection:
    """Y|_M for a right-invariant Y, read in the fiber frame along the units."""
    return A.section(_linked(A).restrict_to_units(Y))


def molino_algebroid() -> AlgebroidPresentation:
    """Rank-one algebroid on the 2-torus with anchor l0 d_th0 + l1 d_th1 and zero bracket."""
    K = scalar_field(("l0", "l1"))
    M = Chart([], [("th0", "c0", "s0"), ("th1", "c1", "s1")], field=K, name="T2")
    rho = VectorField.from_mapping(M, {"th0": M.param("l0"), "th1": M.param("l1")})
    return AlgebroidPresentation(M, ["e"], [rho], {}, name="molino")
