"""Windowed cohomology of C_m(G) and X_m(G), the anchor map and the derivation solver."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebroid.extract import lie_algebroid_of
from ..multcalc.elements import MultVectorField, as_presentation
from ..multcalc.ops import partial
from ..symcore import ChartFunction
from .linalg import Echelon, apply_functional, kernel, obstruction, quotient, solve
from .windows import (function_basis, invariant_function_basis, linear_combination,
                      multiplicative_field_basis, multiplicative_function_basis, section_basis,
                      vec_function, vec_mult_field, vec_section)


@dataclass
class DegreeWindow:
    """Bases and exact data of one groupoid at a degree bound."""
    example: str
    degree: int
    invariant_functions: list
    multiplicative_functions: list
    multiplicative_fields: list
    sections: list
    partial_images: list
    delta_filtered: bool
    partial_filtered: bool
    h_minus_one: list = field(default_factory=list)
    h_zero_representatives: list = field(default_factory=list)
    h_one_representatives: list = field(default_factory=list)

    @property
    def window_relative(self) -> dict:
        return {"H^-1": False, "H^0 of X_m": True, "H^0 of C_m": False, "H^1 of C_m": True}


def _filtered(sources, images) -> bool:
    return all(img.degree() <= src.degree() for src, img in zip(sources, images))


def degree_window(G, d: int) -> DegreeWindow:
    P = as_presentation(G)
    store = P._cache.setdefault("degree_window", {})
    if d in store:
        return store[d]
    A = lie_algebroid_of(P)
    funcs = function_basis(P.M, d)
    deltas = [P.coboundary(f) for f in funcs]
    secs = section_basis(A, d)
    parts = [partial(a) for a in secs]
    W = DegreeWindow(P.name, d, invariant_function_basis(P, d), multiplicative_function_basis(P, d),
                     multiplicative_field_basis(P, d), secs, parts,
                     _filtered(funcs, deltas),
                     all(p.X.degree() <= a.degree() and p.XM.degree() <= a.degree()
                         for a, p in zip(secs, parts)))
    K = kernel([vec_mult_field(p) for p in parts], P.M.field)
    W.h_minus_one = [linear_combination(secs, v, A.zero_section()) for v in K]
    N = [vec_mult_field(X) for X in W.multiplicative_fields]
    Im = [vec_mult_field(p) for p in parts]
    _, reps = quotient(N, Im, P.M.field)
    W.h_zero_representatives = [W.multiplicative_fields[k] for k in reps]
    _, reps1 = quotient([vec_function(F) for F in W.multiplicative_functions],
                        [vec_function(x) for x in deltas], P.M.field)
    W.h_one_representatives = [W.multiplicative_functions[k] for k in reps1]
    store[d] = W
    return W


def invariant_functions(G, d: int) -> list[ChartFunction]:
    return degree_window(G, d).invariant_functions


def invariant_fields(G, d: int) -> dict:
    """Multiplicative fields of degree <= d modulo the window image of partial."""
    W = degree_window(G, d)
    return {"representatives": W.h_zero_representatives,
            "multiplicative_basis": W.multiplicative_fields,
            "partial_image": [p for p in W.partial_images if not p.is_zero()],
            "window_relative": True}


def h_minus_one(G, d: int) -> list:
    return degree_window(G, d).h_minus_one


# -- the anchor map ------------------------------------------------------

def anchor_map_Lbar(G, x, d: int) -> list[list[ChartFunction]]:
    """Values of L_{X_M} on the invariant window basis; sections act by zero."""
    W = degree_window(G, d)
    if isinstance(x, MultVectorField):
        return [x.XM.apply(f) for f in W.invariant_functions]
    P = as_presentation(G)
    return [P.M.zero() for _ in W.invariant_functions]


@dataclass
class DerivationDecision:
    in_image: bool
    leibniz_defects: list
    witness: dict | None = None
    obstruction: dict | None = None
    obstruction_value: object = None

    def to_dict(self) -> dict:
        out = {"in_image": self.in_image,
               "leibniz_defects": [list(map(str, d)) for d in self.leibniz_defects]}
        if self.witness is not None:
            out["witness"] = {str(k): str(v) for k, v in sorted(self.witness.items())}
        if self.obstruction is not None:
            out["obstruction_functional"] = sorted(
                [[str(k[0]), str(k[0].chart.monomial(k[1])), str(v)]
                 for k, v in self.obstruction.items()])
            out["obstruction_on_target"] = str(self.obstruction_value)
        return out


def window_leibniz_defects(basis: list[ChartFunction], values: list[ChartFunction]) -> list:
    """(b_i, b_j, defect) where D(b_i b_j) != b_i D(b_j) + b_j D(b_i) for products in the window."""
    M = basis[0].chart
    cols = [vec_function(b) for b in basis]
    bad = []
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            prod = basis[i] * basis[j]
            x = solve(cols, vec_function(prod), M.field)
            if x is None:
                continue
            lhs = linear_combination(values, x, M.zero())
            rhs = basis[i] * values[j] + basis[j] * values[i]
            if lhs != rhs:
                bad.append((basis[i], basis[j], lhs - rhs))
    return bad


def derivation_solver(G, d: int, values: list) -> DerivationDecision:
    """Is the derivation with the given values on the invariant window basis some L_{X_M}?

    Images of the multiplicative window basis are taken in full (not
    truncated), so a returned obstruction functional kills every L_{X_M} with
    X of degree <= d while taking the value 1 on the target.
    """
    P = as_presentation(G)
    W = degree_window(G, d)
    basis = W.invariant_functions
    values = [v if isinstance(v, ChartFunction) else P.M.parse(v) if isinstance(v, str)
              else P.M.const(v) for v in values]
    if len(values) != len(basis):
        raise ValueError("one value per invariant basis element is required")
    bad = window_leibniz_defects(basis, values)

    def vec(vals):
        out = {}
        for i, v in enumerate(vals):
            for m, c in v.terms.items():
                out[(basis[i], m)] = c
        return out

    cols = [vec(anchor_map_Lbar(P, X, d)) for X in W.multiplicative_fields]
    target = vec(values)
    x = solve(cols, target, P.M.field)
    if x is not None:
        witness = {str(W.multiplicative_fields[k]): v for k, v in x.items()}
        return DerivationDecision(True, bad, witness=witness)
    y = obstruction(cols, target, P.M.field)
    return DerivationDecision(False, bad, obstruction=y, obstruction_value=apply_functional(y, target))


def lbar_rank_data(G, d: int) -> dict:
    """Rank of L-bar on the H^0 window and the dimension of H^-1 (killed by L-bar)."""
    W = degree_window(G, d)
    P = as_presentation(G)
    cols = []
    for X in W.h_zero_representatives:
        vals = anchor_map_Lbar(P, X, d)
        cols.append({(i, m): c for i, v in enumerate(vals) for m, c in v.terms.items()})
    rank = Echelon(cols, P.M.field).rank if cols else 0
    return {"h0_dim": len(W.h_zero_representatives), "lbar_rank_on_h0": rank,
            "h_minus_one_dim": len(W.h_minus_one),
            "injective": rank == len(W.h_zero_representatives) and not W.h_minus_one}


def proper_crosscheck(G, d: int) -> dict:
    """H^-1 against sections killed by the anchor, and H^1 of C_m against zero."""
    P = as_presentation(G)
    W = degree_window(G, d)
    A = lie_algebroid_of(P)
    cols = [{("anchor", k, m): c for k, a in enumerate(A.anchor(s).coeffs) for m, c in a.terms.items()}
            for s in W.sections]
    K = kernel(cols, P.M.field)
    killed = [linear_combination(W.sections, v, A.zero_section()) for v in K]
    inv_killed = [s for s in killed if partial(s).is_zero()]
    same = (Echelon([vec_section(s) for s in W.h_minus_one] + [vec_section(s) for s in inv_killed],
                    P.M.field).rank == len(W.h_minus_one) == len(inv_killed))
    return {"example": P.name, "degree": d,
            "h_minus_one": [str(s) for s in W.h_minus_one],
            "anchor_kernel_invariant": [str(s) for s in inv_killed],
            "h_minus_one_matches": same,
            "h_one_window": [str(F) for F in W.h_one_representatives],
            "h_one_zero": not W.h_one_representatives,
            "passed": same and not W.h_one_representatives}
