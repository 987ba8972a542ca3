"""Van-Est maps from the groupoid complexes to the algebroid complexes."""

from __future__ import annotations

from ..checks import CheckSet
from ..symcore import VectorField
from .core import AlgebroidDerivation, AlgebroidError, AlgebroidPresentation, IMFunction
from .extract import restrict_section, right_invariant
from .ops import AlgebroidFunElement, AlgebroidVFElement, dgla_A_bracket, mu_bar, obullet


def _check_link(A: AlgebroidPresentation, P) -> None:
    if A.groupoid is not P:
        raise AlgebroidError(f"{A.name} is not the algebroid of {P.name}")


def derivation_of_field(A: AlgebroidPresentation, X) -> AlgebroidDerivation:
    """D_X: alpha -> [X, alpha^r]|_M, with symbol read off from dt along the units."""
    P = X.groupoid
    _check_link(A, P)
    M = P.M
    symbol = VectorField.from_derivation(
        M, {g: P.u.pullback(X.X.apply(P.t_pull(M.gen(g)))).only for g in M.gens})
    values = [restrict_section(A, X.X.bracket(right_invariant(A.frame_section(k))))
              for k in range(A.rank)]
    return AlgebroidDerivation(A, symbol, values)


def im_function_of(A: AlgebroidPresentation, F) -> IMFunction:
    """omega_F: alpha -> u^* L_{alpha^r} F, stored by frame values."""
    P = A.groupoid
    if P is None:
        raise AlgebroidError(f"{A.name} is not linked to a groupoid")
    F = P.G.function(F)
    return IMFunction(A, [P.u_pull(E.apply(F)) for E in P.right_frame()])


def VE(x) -> AlgebroidVFElement:
    """Identity on sections, X -> D_X on multiplicative fields."""
    A = x.alpha.algebroid
    return AlgebroidVFElement(x.alpha, derivation_of_field(A, x.X))


def oVE(A: AlgebroidPresentation, y) -> AlgebroidFunElement:
    """Identity on functions, F -> omega_F on multiplicative functions."""
    return AlgebroidFunElement(y.f, im_function_of(A, y.F))


# -- the commutative square ------------------------------------------------

def verify_vanest_square(G, samples: int = 20, seed: int = 0) -> dict:
    """Re-check oVE(x . y) = VE(x) o oVE(y) case by case, plus the chain-map identities."""
    from ..multcalc import (GradedFunElement, GradedVFElement, bracket2, bullet, delta, mu, partial)
    from ..multcalc.sampling import Sampler

    S = Sampler(G, seed)
    P, A = S.P, S.A
    cases = CheckSet((
        "(alpha, f)", "(alpha, F)", "(X, f)", "(X, F)", "VE o partial = ad", "oVE o delta = dA",
        "VE bracket", "D_X derivation with symbol X_M", "omega_F cocycle", "oVE o mu = mu_bar o (VE, oVE)"))
    for _ in range(samples):
        alpha, X = S.section(), S.mult_field()
        f, F = S.function(), S.mult_function()
        omega_F = im_function_of(A, F)
        D_X = derivation_of_field(A, X)
        # (alpha, f): both sides live in degree -1 and vanish
        cases["(alpha, f)"].record(bullet(alpha, f) is None and obullet(alpha, f) is None)
        # (alpha, F): bullet through alpha^r versus omega_F evaluated C^oo-linearly
        lhs = bullet(alpha, F)
        rhs = obullet(alpha, omega_F)
        direct = P.u_pull(P.right_invariant_direct(alpha.coeffs, F))
        cases["(alpha, F)"].record(lhs == rhs == direct, lhs=lhs, rhs=rhs, direct=direct)
        # (X, f): the symbol of D_X comes from dt, not from X_M
        lhs = bullet(X, f)
        rhs = obullet(D_X, f)
        cases["(X, f)"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        # (X, F)
        lhs = im_function_of(A, bullet(X, F))
        rhs = obullet(D_X, omega_F)
        cases["(X, F)"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        # chain maps
        lhs = derivation_of_field(A, partial(alpha))
        rhs = A.ad(alpha)
        cases["VE o partial = ad"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        lhs = im_function_of(A, delta(P, f))
        rhs = A.dA(f)
        cases["oVE o delta = dA"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        cases["D_X derivation with symbol X_M"].record(
            D_X.is_derivation() and D_X.symbol == X.XM, defects=D_X.defects(),
            symbol=D_X.symbol, base=X.XM)
        cases["omega_F cocycle"].record(omega_F.is_cocycle(), defects=omega_F.cocycle_defects())
        # full elements
        x = GradedVFElement(alpha, X)
        x2 = GradedVFElement(S.section(), S.mult_field())
        y = GradedFunElement(f, F)
        lhs = VE(bracket2(x, x2))
        rhs = dgla_A_bracket(VE(x), VE(x2))
        cases["VE bracket"].record(lhs == rhs, lhs=lhs, rhs=rhs)
        lhs = oVE(A, mu(x, y))
        rhs = mu_bar(VE(x), oVE(A, y))
        cases["oVE o mu = mu_bar o (VE, oVE)"].record(lhs == rhs, lhs=lhs, rhs=rhs)
    return {"example": P.name, "seed": seed, "samples": samples,
            "passed": cases.passed, "cases": cases.to_list()}

