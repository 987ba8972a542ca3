"""Machine-readable cohomology reports: bases, sparse matrices, verdicts and certificates."""

from __future__ import annotations

from ..multcalc.elements import as_presentation
from ..symcore import ChartFunction, VectorField
from .algebroid_windows import algebroid_window, class_is_nonzero
from .groupoid_windows import (anchor_map_Lbar, degree_window, derivation_solver, lbar_rank_data,
                               proper_crosscheck, window_leibniz_defects)
from .linalg import Echelon
from .windows import function_basis, vec_derivation, vec_function, vec_mult_field

# finite action groupoids, bundles of tori, pair and submersion groupoids
PROPER = ("unit-R", "pair-R", "pair-S1", "submersion-R2-R", "circle-group", "torus-bundle-R",
          "z2-reflection")


def _one_over_x_ddx(f: ChartFunction) -> ChartFunction:
    """(1/x) d/dx on a polynomial in x alone; defined on even polynomials."""
    raw = {}
    for (k,), c in f.terms.items():
        if k % 2:
            raise ValueError("(1/x) d/dx needs an even polynomial")
        if k:
            raw[(k - 2,)] = c * k
    return ChartFunction(f.chart, raw)


def _lie_derivative_probe(phi: str):
    def probe(f: ChartFunction) -> ChartFunction:
        M = f.chart
        return VectorField.from_mapping(M, {M.derivations[0]: phi}).apply(f)
    return probe


# candidate derivations of the invariant algebra, given by their action on functions
DERIVATION_PROBES = {
    "z2-reflection": ("(1/x) d/dx", _one_over_x_ddx),
    "unit-R": ("L_{(1 + x) d/dx}", _lie_derivative_probe("(+ 1 x)")),
}


# -- rendering -----------------------------------------------------------

def scalar_str(field, x) -> str:
    return field.to_str(x)


def _mono(chart, m) -> str:
    return str(chart.monomial(m))


def function_rows(space):
    """Labeler for vec_function keys on a space or a chart."""
    charts = [space] if not hasattr(space, "charts") else list(space.charts)

    def label(key) -> str:
        tag, comp, m = key
        pre = f"{tag}:" if tag not in ("", None) else ""
        return f"{pre}{comp}:{_mono(charts[comp], m)}"
    return label


def mult_field_rows(P):
    def label(key) -> str:
        (tag, part), comp, j, m = key
        chart = P.G.charts[comp] if part == "G" else P.M
        return f"{part}{comp}:d_{chart.derivations[j]}:{_mono(chart, m)}"
    return label


def sparse_matrix(columns: list[dict], labeler, field, column_labels: list[str]) -> dict:
    """Columns as vectors; rows are the sorted labels of all nonzero entries."""
    labelled = [{labeler(k): v for k, v in col.items() if v} for col in columns]
    rows = sorted({r for col in labelled for r in col})
    index = {r: i for i, r in enumerate(rows)}
    entries = sorted([index[r], j, scalar_str(field, v)]
                     for j, col in enumerate(labelled) for r, v in col.items())
    return {"rows": rows, "columns": column_labels, "entries": entries}


# -- groupoid report -------------------------------------------------------

def cohomology_report(G, d: int = 4) -> dict:
    P = as_presentation(G)
    W = degree_window(P, d)
    K = P.M.field
    funcs = function_basis(P.M, d)
    strs = lambda xs: [str(x) for x in xs]  # noqa: E731
    bases = {
        "functions": strs(funcs),
        "invariant_functions": strs(W.invariant_functions),
        "multiplicative_functions": strs(W.multiplicative_functions),
        "multiplicative_fields": strs(W.multiplicative_fields),
        "sections": strs(W.sections),
        "H^-1": strs(W.h_minus_one),
        "H^0 of X_m": strs(W.h_zero_representatives),
        "H^1 of C_m": strs(W.h_one_representatives),
    }
    delta_m = sparse_matrix([vec_function(P.coboundary(f)) for f in funcs], function_rows(P.G), K,
                            strs(funcs))
    partial_m = sparse_matrix([vec_mult_field(p) for p in W.partial_images], mult_field_rows(P), K,
                              strs(W.sections))
    inv = W.invariant_functions
    lbar_cols, lbar_ok = [], True
    for X in W.h_zero_representatives:
        vals = anchor_map_Lbar(P, X, d)
        lbar_cols.append({(i, m): c for i, v in enumerate(vals) for m, c in v.terms.items()})
        if inv and window_leibniz_defects(inv, vals):
            lbar_ok = False
    inv_labels = strs(inv)
    lbar_m = sparse_matrix(lbar_cols, lambda k: f"{inv_labels[k[0]]} -> {_mono(P.M, k[1])}", K,
                           bases["H^0 of X_m"])
    lbar = lbar_rank_data(P, d)
    verdicts = {
        "delta_degree_filtered": W.delta_filtered,
        "partial_degree_filtered": W.partial_filtered,
        "kernels_exact": W.delta_filtered and W.partial_filtered,
        "lbar_lands_in_derivations": lbar_ok,
        "lbar_rank_on_H0": lbar["lbar_rank_on_h0"],
        "H^-1_nonzero": bool(W.h_minus_one),
        "anchor_map_injective": lbar["injective"],
        "proper": P.name in PROPER,
    }
    certificates = {}
    if W.h_minus_one:
        # a nonzero class of degree -1 is sent to zero by L-bar
        certificates["non_injectivity"] = {"kernel_vector": bases["H^-1"][0],
                                           "lbar_image": "0"}
    passed = verdicts["kernels_exact"] and lbar_ok
    if P.name in PROPER:
        pc = proper_crosscheck(P, d)
        verdicts["proper_crosscheck"] = {k: pc[k] for k in ("h_minus_one_matches", "h_one_zero")}
        passed = passed and pc["passed"]
    if P.name in DERIVATION_PROBES and inv:
        label, probe = DERIVATION_PROBES[P.name]
        dec = derivation_solver(P, d, [probe(f) for f in inv])
        certificates["derivation_probe"] = {"derivation": label,
                                            "values": [str(probe(f)) for f in inv],
                                            **dec.to_dict()}
        verdicts["derivation_probe_in_image"] = dec.in_image
        passed = passed and not dec.leibniz_defects
    return {
        "example": P.name, "degree_bound": d, "kind": "groupoid",
        "window_relative": W.window_relative, "bases": bases,
        "matrices": {"delta": delta_m, "partial": partial_m, "Lbar": lbar_m},
        "verdicts": verdicts, "certificates": certificates, "passed": passed,
    }


# -- algebroid report ------------------------------------------------------

def algebroid_report(A, d: int = 4) -> dict:
    """Windowed H^-1, H^0 and invariants of a framed algebroid, with the anchor map."""
    M = A.M
    K = M.field
    W = algebroid_window(A, d)
    strs = lambda xs: [str(x) for x in xs]  # noqa: E731
    inv = W["invariants"]
    lbar_zero = all(not D.symbol.apply(f) for D in W["derivations"] for f in inv)
    reps = W["h0_representatives"]
    basis = [str(D) for D in reps]
    certificates = {}
    if A.name == "molino":
        l0, l1 = M.param("l0"), M.param("l1")
        tau = A.derivation(VectorField.from_mapping(M, {"th0": -l1, "th1": l0}), [A.zero_section()])
        check = class_is_nonzero(A, tau, d)
        certificates["tau"] = {"representative": str(tau), **check}
        if W["h0_dim"] == 1 and check["nonzero_class"]:
            basis = [str(tau)]
    ad_rank = Echelon([vec_derivation(D) for D in W["ad_image"]], K).rank
    verdicts = {
        "invariants_constant": all(f.constant_value() is not None for f in inv),
        "H^-1_nonzero": bool(W["h_minus_one"]),
        "H^0_dim": W["h0_dim"], "derivations_dim": len(W["derivations"]), "ad_image_rank": ad_rank,
        "lbar_zero": lbar_zero,
    }
    passed = not A.check()
    if "tau" in certificates:
        passed = passed and certificates["tau"]["nonzero_class"]
    return {
        "example": A.name, "degree_bound": d, "kind": "algebroid",
        "window_relative": {"H^-1": False, "H^0 of X_m": True, "invariants": False},
        "bases": {"invariant_functions": strs(inv), "H^-1": strs(W["h_minus_one"]),
                  "H^0 of X_m": basis},
        "matrices": {"Lbar": sparse_matrix(
            [{(i, m): c for i, f in enumerate(inv) for m, c in D.symbol.apply(f).terms.items()}
             for D in reps], lambda k: f"{strs(inv)[k[0]]} -> {_mono(M, k[1])}", K, basis)},
        "verdicts": verdicts, "certificates": certificates, "passed": passed,
    }


def report_for(obj, d: int = 4) -> dict:
    from ..algebroid.core import AlgebroidPresentation
    if isinstance(obj, AlgebroidPresentation):
        return algebroid_report(obj, d)
    return cohomology_report(obj, d)


__all__ = ["PROPER", "DERIVATION_PROBES", "algebroid_report", "cohomology_report", "report_for",
           "sparse_matrix"]
