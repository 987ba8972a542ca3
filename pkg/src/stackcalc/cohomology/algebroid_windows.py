"""Windowed cohomology of C_m(A) and X_m(A) for a framed algebroid."""

from __future__ import annotations

from ..algebroid.core import AlgebroidDerivation, AlgebroidPresentation
from ..symcore import VectorField
from .linalg import Echelon, kernel, quotient
from .windows import (field_basis, function_basis, linear_combination, section_basis,
                      vec_derivation, vec_field, vec_function, vec_section)


def derivation_constraints(D: AlgebroidDerivation) -> dict:
    """Anchor compatibility and bracket-derivation defects as one vector."""
    A = D.algebroid
    e = [A.frame_section(k) for k in range(A.rank)]
    out = {}
    for i in range(A.rank):
        out.update(vec_field(A.anchor(D.values[i]) - D.symbol.bracket(A.anchor_fields[i]),
                             ("anchor", i)))
    for i in range(A.rank):
        for j in range(i + 1, A.rank):
            d = D(A.bracket(e[i], e[j])) - A.bracket(D.values[i], e[j]) - A.bracket(e[i], D.values[j])
            out.update(vec_section(d, ("bracket", i, j)))
    return out


def derivation_window(A: AlgebroidPresentation, d: int) -> list[AlgebroidDerivation]:
    """Exact basis of derivations with symbol and frame values of degree <= d."""
    M = A.M
    zero_vals = [A.zero_section()] * A.rank
    cands = [AlgebroidDerivation(A, X, zero_vals) for X in field_basis(M, d)]
    for k in range(A.rank):
        for s in section_basis(A, d):
            vals = list(zero_vals)
            vals[k] = s
            cands.append(AlgebroidDerivation(A, VectorField.zero(M), vals))
    K = kernel([derivation_constraints(D) for D in cands], M.field)
    return [linear_combination(cands, v, A.zero_derivation()) for v in K]


def algebroid_window(A: AlgebroidPresentation, d: int) -> dict:
    """ker d_A, ker ad, and Der(A) modulo ad(Gamma(A)) on the degree-d window."""
    M = A.M
    funcs = function_basis(M, d)
    invariants = [linear_combination(funcs, v, M.zero())
                  for v in kernel([vec_function_im(A, f) for f in funcs], M.field)]
    secs = section_basis(A, d)
    ads = [A.ad(s) for s in secs]
    h_minus_one = [linear_combination(secs, v, A.zero_section())
                   for v in kernel([vec_derivation(D) for D in ads], M.field)]
    ders = derivation_window(A, d)
    dim, reps = quotient([vec_derivation(D) for D in ders], [vec_derivation(D) for D in ads],
                         M.field)
    return {"invariants": invariants, "h_minus_one": h_minus_one, "derivations": ders,
            "ad_image": ads, "h0_dim": dim, "h0_representatives": [ders[k] for k in reps]}


def vec_function_im(A: AlgebroidPresentation, f) -> dict:
    out = {}
    for k, v in enumerate(A.dA(f).values):
        out.update(vec_function(v, k))
    return out


def class_is_nonzero(A: AlgebroidPresentation, D: AlgebroidDerivation, d: int) -> dict:
    """D is a derivation and is not in ad(Gamma(A)) restricted to the window."""
    ads = [vec_derivation(A.ad(s)) for s in section_basis(A, d)]
    is_der = D.is_derivation()
    r0 = Echelon(ads, A.M.field).rank
    r1 = Echelon(ads + [vec_derivation(D)], A.M.field).rank
    return {"derivation": is_der, "outside_ad_image": r1 > r0, "nonzero_class": is_der and r1 > r0}


def molino_analysis(d: int = 4) -> dict:
    """Invariants, H^-1, H^0 and the anchor map for the rank-one algebroid on the torus."""
    from ..algebroid.extract import molino_algebroid

    A = molino_algebroid()
    M = A.M
    W = algebroid_window(A, d)
    l0, l1 = M.param("l0"), M.param("l1")
    tau = AlgebroidDerivation(A, VectorField.from_mapping(M, {"th0": -l1, "th1": l0}),
                              [A.zero_section()])
    tau_check = class_is_nonzero(A, tau, d)
    constants_only = all(f.constant_value() is not None for f in W["invariants"])
    lbar = [[str(D.symbol.apply(f)) for f in W["invariants"]] for D in W["h0_representatives"]]
    lbar_zero = all(not D.symbol.apply(f) for D in W["derivations"] for f in W["invariants"])
    basis = [str(tau.symbol)] if W["h0_dim"] == 1 and tau_check["nonzero_class"] else \
        [str(D.symbol) for D in W["h0_representatives"]]
    return {
        "example": "molino", "degree": d, "window_relative": True,
        "invariants": [str(f) for f in W["invariants"]], "invariants_constant": constants_only,
        "h_minus_one_dim": len(W["h_minus_one"]),
        "derivations_dim": len(W["derivations"]), "ad_image_rank": Echelon(
            [vec_derivation(D) for D in W["ad_image"]], M.field).rank,
        "h0_dim": W["h0_dim"], "h0_basis": basis, "tau": tau_check,
        "lbar_on_representatives": lbar, "lbar_zero": lbar_zero,
        "passed": (constants_only and len(W["invariants"]) == 1 and W["h0_dim"] == 1
                   and tau_check["nonzero_class"] and lbar_zero and not W["h_minus_one"]),
    }


# gallery examples whose source fibers are connected and simply connected
SOURCE_SIMPLY_CONNECTED = ("unit-R", "pair-R", "submersion-R2-R", "real-line-group")


def vec_im_function(omega, tag="") -> dict:
    out = {}
    for k, v in enumerate(omega.values):
        out.update(vec_function(v, (tag, k)))
    return out


def im_cocycle_window(A: AlgebroidPresentation, d: int) -> list:
    """Exact basis of IM cocycles with frame values of degree <= d."""
    M = A.M
    cands = []
    for k in range(A.rank):
        for f in function_basis(M, d):
            vals = [M.zero()] * A.rank
            vals[k] = f
            cands.append(A.im_function(vals))
    cols = []
    for w in cands:
        col = {}
        for a, b, dfc in w.cocycle_defects():
            col.update(vec_function(dfc, (a, b)))
        cols.append(col)
    zero = A.im_function([M.zero()] * A.rank)
    return [linear_combination(cands, v, zero) for v in kernel(cols, M.field)]


def vanest_window_check(G, d: int = 4) -> dict:
    """Injectivity of VE and oVE on degree windows, and preimages of windowed cocycles.

    A cocycle or derivation with data of degree <= d is matched against
    multiplicative data of degree <= d + 1, since differentiation along the
    units lowers degree by at most one.
    """
    from ..algebroid.extract import lie_algebroid_of
    from ..algebroid.vanest import derivation_of_field, im_function_of
    from ..multcalc.elements import as_presentation
    from .linalg import solve
    from .windows import multiplicative_field_basis, multiplicative_function_basis

    P = as_presentation(G)
    A = lie_algebroid_of(P)
    K = P.M.field
    Fs = multiplicative_function_basis(P, d)
    Xs = multiplicative_field_basis(P, d)
    oves = [vec_im_function(im_function_of(A, F)) for F in Fs]
    ves = [vec_derivation(derivation_of_field(A, X)) for X in Xs]
    ove_inj = Echelon(oves, K).rank == len(Fs)
    ve_inj = Echelon(ves, K).rank == len(Xs)
    Fs1 = multiplicative_function_basis(P, d + 1)
    Xs1 = multiplicative_field_basis(P, d + 1)
    cols_F = [vec_im_function(im_function_of(A, F)) for F in Fs1]
    cols_X = [vec_derivation(derivation_of_field(A, X)) for X in Xs1]
    cocycles = im_cocycle_window(A, d)
    missing_w = [str(w) for w in cocycles if solve(cols_F, vec_im_function(w), K) is None]
    ders = derivation_window(A, d)
    missing_d = [str(D) for D in ders if solve(cols_X, vec_derivation(D), K) is None]
    return {"example": P.name, "degree": d,
            "oVE_injective": ove_inj, "VE_injective": ve_inj,
            "multiplicative_functions": len(Fs), "multiplicative_fields": len(Xs),
            "cocycles": len(cocycles), "cocycles_without_preimage": missing_w,
            "derivations": len(ders), "derivations_without_preimage": missing_d,
            "passed": ove_inj and ve_inj and not missing_w and not missing_d}
