"""Window-scale comparison along a groupoid morphism."""

from __future__ import annotations

from dataclasses import dataclass

from ..checks import CheckSet
from ..groupoid import PresentationError, build_example, map_defects, unit_groupoid
from ..multcalc.elements import MultVectorField, as_presentation
from ..multcalc.sampling import Sampler
from ..symcore import Chart, SpaceMap, SmoothMap, VectorField, identity_map
from .groupoid_windows import degree_window
from .linalg import Echelon, kernel, quotient
from .windows import (field_basis, linear_combination, space_field_basis, vec_function,
                      vec_mult_field)


@dataclass
class GroupoidMorphism:
    """phi: G -> H on arrows and phi_0 on the base."""
    source: object
    target: object
    arrows: SpaceMap
    base: SmoothMap
    name: str = "phi"

    def defects(self) -> list[tuple[str, str, str, str]]:
        G, H = self.source, self.target
        base = SpaceMap.single(G.Mspace, H.Mspace, self.base, name="phi0")
        phi = self.arrows
        bad = []
        for label, f, g in (("s", H.s.compose(phi), base.compose(G.s)),
                            ("t", H.t.compose(phi), base.compose(G.t)),
                            ("u", phi.compose(G.u), H.u.compose(base)),
                            ("m", H.m.compose(H.pair(phi.compose(G.pr1), phi.compose(G.pr2))),
                             phi.compose(G.m))):
            bad.extend((label,) + d for d in map_defects(f, g))
        return bad

    def pull_function(self, F):
        return self.arrows.pullback(self.target.G.function(F))

    def pull_base(self, f):
        return self.base.pullback(f)


def submersion_to_unit() -> GroupoidMorphism:
    """submersion(R^2 -> R) -> unit(R): (x, y, y') -> x."""
    G = as_presentation(build_example("submersion-R2-R"))
    H = as_presentation(build_example("unit-R"))
    arrows = SpaceMap.single(G.G, H.G, SmoothMap(G.G.chart, H.G.chart, {"x": "x"}), name="phi")
    base = SmoothMap(G.M, H.M, {"x": "x"}, name="phi0")
    return GroupoidMorphism(G, H, arrows, base, name="submersion-R2-R -> unit-R")


def identity_morphism(G) -> GroupoidMorphism:
    P = as_presentation(G)
    return GroupoidMorphism(P, P, P.id_G(), identity_map(P.M), name=f"id({P.name})")


def pair_to_point(name: str) -> GroupoidMorphism:
    """pair(M) -> unit(pt), collapsing everything."""
    G = as_presentation(build_example(name))
    H = unit_groupoid(Chart([], name="pt"), name="unit-pt")
    arrows = SpaceMap.single(G.G, H.G, SmoothMap(G.G.chart, H.G.chart, {}), name="phi")
    base = SmoothMap(G.M, H.M, {}, name="phi0")
    return GroupoidMorphism(G, H, arrows, base, name=f"{name} -> unit-pt")


MORITA_PAIRS = {
    "submersion-R2-R->unit-R": submersion_to_unit,
    "pair-R->unit-pt": lambda: pair_to_point("pair-R"),
    "pair-S1->unit-pt": lambda: pair_to_point("pair-S1"),
}


def projectable_window(phi: GroupoidMorphism, d: int) -> list[tuple[MultVectorField, MultVectorField]]:
    """Multiplicative X of degree <= d with phi_* X = Y defined, paired with Y."""
    G, H = phi.source, phi.target
    W = degree_window(G, d)
    HX = space_field_basis(H.G, d)
    HM = field_basis(H.M, d)
    gens_G = [(k, g) for k, c in enumerate(H.G.charts) for g in c.gens]

    def constraint(X, XM, Y, YM) -> dict:
        out = {}
        for k, g in gens_G:
            parts = [c.zero() for c in H.G.charts]
            parts[k] = H.G.charts[k].gen(g)
            h = H.G.function(parts)
            lhs = X.apply(phi.arrows.pullback(h)) if X is not None else None
            rhs = phi.arrows.pullback(Y.apply(h)) if Y is not None else None
            v = lhs if rhs is None else (-rhs if lhs is None else lhs - rhs)
            if v is not None:
                out.update(vec_function(v, ("G", k, g)))
        for g in H.M.gens:
            lhs = XM.apply(phi.base.pullback(H.M.gen(g))) if XM is not None else None
            rhs = phi.base.pullback(YM.apply(H.M.gen(g))) if YM is not None else None
            v = lhs if rhs is None else (-rhs if lhs is None else lhs - rhs)
            if v is not None:
                out.update(vec_function(v, ("M", g)))
        return out

    cols = [constraint(X.X, X.XM, None, None) for X in W.multiplicative_fields]
    cols += [constraint(None, None, Y, None) for Y in HX]
    cols += [constraint(None, None, None, Y) for Y in HM]
    K = kernel(cols, G.M.field)
    n1, n2 = len(W.multiplicative_fields), len(HX)
    out = []
    zero = MultVectorField.zero(G)
    for v in K:
        X = zero
        for j, a in sorted(v.items()):
            if j < n1:
                X = X + W.multiplicative_fields[j].scale(a)
        Y = linear_combination(HX, {j - n1: a for j, a in v.items() if n1 <= j < n1 + n2},
                               H.G.zero_field())
        YM = linear_combination(HM, {j - n1 - n2: a for j, a in v.items() if j >= n1 + n2},
                                VectorField.zero(H.M))
        if X.is_zero():
            continue  # freedom in Y alone, not a projectable field
        out.append((X, MultVectorField(H, Y, YM)))
    return out


def morita_compare(phi: GroupoidMorphism, d: int = 4, samples: int = 20, seed: int = 0) -> dict:
    bad = phi.defects()
    if bad:
        raise PresentationError(f"{phi.name} is not a groupoid morphism: {bad[0]}")
    G, H = phi.source, phi.target
    WG, WH = degree_window(G, d), degree_window(H, d)
    field = G.M.field
    # functions: phi_0^* on invariant windows
    pulled = [phi.pull_base(f) for f in WH.invariant_functions]
    lands = all(G.coboundary(f).is_zero() for f in pulled)
    r = Echelon([vec_function(f) for f in pulled] + [vec_function(f) for f in WG.invariant_functions],
                field).rank
    fun_bijective = lands and r == len(pulled) == len(WG.invariant_functions)
    # fields: projectable subcomplex, inclusion and projection on H^0 windows
    pairs = projectable_window(phi, d)
    imG = [vec_mult_field(p) for p in WG.partial_images]
    imH = [vec_mult_field(p) for p in WH.partial_images]
    # reps are independent modulo im(partial) in X_m(G), so inc is injective on the window
    dim_phi, reps = quotient([vec_mult_field(X) for X, _ in pairs], imG, field)
    proj_dim, _ = quotient([vec_mult_field(pairs[k][1]) for k in reps], imH, field)
    h0G, h0H = len(WG.h_zero_representatives), len(WH.h_zero_representatives)
    inc_iso = dim_phi == h0G
    proj_iso = proj_dim == dim_phi == h0H
    # module compatibility on samples
    S = Sampler(G, seed)
    T = Sampler(H, seed + 1)
    C = CheckSet()
    for _ in range(samples):
        X, Y = S.rng.choice(pairs) if pairs else (MultVectorField.zero(G), MultVectorField.zero(H))
        c = S._coeff() or 1
        X, Y = X.scale(c), Y.scale(c)
        F, f = T.mult_function(), T.function()
        lhs = phi.pull_function(Y.X.apply(F))
        rhs = X.X.apply(phi.pull_function(F))
        C["phi^*(L_{phi(X)} F) = L_X(phi^* F)"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        lhs = phi.pull_base(Y.XM.apply(f))
        rhs = X.XM.apply(phi.pull_base(f))
        C["phi_0^*(L_{phi(X)_M} f) = L_{X_M}(phi_0^* f)"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        g = T.invariant_function()
        C["phi_0^* preserves invariants"].record(G.coboundary(phi.pull_base(g)).is_zero())
        a, b = T.function(), T.function()
        C["phi^* is multiplicative on C^oo(M)"].record(
            phi.pull_base(a * b) == phi.pull_base(a) * phi.pull_base(b))
    report = {
        "morphism": phi.name, "degree": d, "window_relative": True,
        "h0_functions": {"source": len(WG.invariant_functions), "target": len(WH.invariant_functions),
                         "pullback_bijective": fun_bijective},
        "h0_fields": {"source": h0G, "target": h0H, "projectable": dim_phi,
                      "inclusion_iso": inc_iso, "projection_iso": proj_iso},
        "h_minus_one": {"source": len(WG.h_minus_one), "target": len(WH.h_minus_one)},
        "h_one": {"source": len(WG.h_one_representatives), "target": len(WH.h_one_representatives)},
        "samples": samples, "seed": seed, "cases": C.to_list(),
    }
    report["passed"] = (fun_bijective and inc_iso and proj_iso and C.passed
                        and len(WG.h_minus_one) == len(WH.h_minus_one)
                        and len(WG.h_one_representatives) == len(WH.h_one_representatives))
    return report
