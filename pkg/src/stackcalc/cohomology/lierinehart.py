"""Graded Lie-Rinehart structure on the windowed cohomology."""

from __future__ import annotations

from ..checks import CheckSet
from ..multcalc.elements import GradedVFElement, MultVectorField
from ..multcalc.ops import bracket2, bullet, cm0_action, delta, partial
from ..multcalc.sampling import Sampler


def _act(P, r, x):
    """r . x for an invariant r and a homogeneous x."""
    if isinstance(x, MultVectorField):
        return MultVectorField(P, x.X * P.t_pull(r), x.XM * r)
    return x * r


def is_unit_groupoid(P) -> bool:
    if len(P.G) != 1 or P.G.chart != P.M:
        return False
    return all(mp.images == tuple(P.M.gen(g) for g in P.M.gens)
               for mp in (P.s.parts[0][1], P.t.parts[0][1]))


def lie_rinehart_check(G, d: int = 4, samples: int = 20, seed: int = 0) -> dict:
    """Graded Leibniz rule, and L-bar as a morphism of graded Lie algebras and of modules.

    Samples x, y are homogeneous multiplicative fields or sections and r an
    invariant function.  All identities are checked exactly on representatives,
    which is stronger than the class-level statements.
    """
    S = Sampler(G, seed)
    P = S.P
    C = CheckSet()
    unit = is_unit_groupoid(P)
    for _ in range(samples):
        r = S.invariant_function()
        g = S.invariant_function()
        xs = {"X": S.mult_field(), "alpha": S.section()}
        ys = {"Y": S.mult_field(), "beta": S.section()}
        for xn, x in xs.items():
            # the anchor of a degree -1 element is zero
            Lx_r = bullet(x, r) if isinstance(x, MultVectorField) else None
            for yn, y in ys.items():
                lhs = bracket2(x, _act(P, r, y))
                xy = bracket2(x, y)
                if lhs is None:
                    C[f"grLeib [{xn}, r {yn}]"].record(xy is None)
                    continue
                rhs = _act(P, r, xy)
                if isinstance(x, MultVectorField):
                    rhs = _act(P, Lx_r, y) + rhs
                C[f"grLeib [{xn}, r {yn}]"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        X, Y, alpha = xs["X"], ys["Y"], xs["alpha"]
        # L-bar is a morphism of graded Lie algebras
        XY = bracket2(X, Y)
        lhs = bullet(XY, g)
        rhs = bullet(X, bullet(Y, g)) - bullet(Y, bullet(X, g))
        C["Lbar[[X,Y]] = [Lbar X, Lbar Y]"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        Xa = bracket2(X, alpha)
        val = Xa.algebroid.anchor(Xa).apply(g)
        val2 = alpha.algebroid.anchor(alpha).apply(g)
        C["Lbar vanishes in degree -1"].record(not val and not val2, bracket=val, section=val2)
        # module morphism: Lbar(r X) = r Lbar(X)
        rX = cm0_action(P, r, GradedVFElement(alpha, X)).X
        lhs = bullet(rX, g)
        rhs = r * bullet(X, g)
        C["Lbar(r X) = r Lbar(X)"].record(lhs == rhs and bool(rX.verdict()), lhs=lhs, rhs=rhs)
        # Lbar lands in derivations of the invariant algebra
        Xg = bullet(X, g)
        C["Lbar(X) preserves invariants"].record(delta(P, Xg).is_zero(), value=Xg)
        lhs = bullet(X, r * g)
        rhs = bullet(X, r) * g + r * bullet(X, g)
        C["Lbar(X) is a derivation"].record(lhs == rhs)
        # partial(alpha) acts by zero on invariants, so the anchor descends to H^0
        C["Lbar(partial alpha) = 0"].record(not bullet(partial(alpha), g))
        if unit:
            f = S.function()
            lhs = bullet(X, f)
            rhs = X.X.parts[0].apply(f)
            C["unit groupoid: Lbar(X)(f) = L_X f"].record(lhs == rhs, lhs=lhs, rhs=rhs)
    return {"example": P.name, "suite": "lie-rinehart", "degree": d, "seed": seed,
            "samples": samples, "unit_groupoid": unit, "passed": C.passed, "cases": C.to_list()}
