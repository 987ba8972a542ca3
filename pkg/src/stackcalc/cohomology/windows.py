"""Degree windows: bases of truncated function and field spaces and their vectorization.

Every image is computed in full before it is vectorized, so kernels found
inside a window are kernels of the untruncated maps.
"""

from __future__ import annotations

from ..symcore import Chart, ChartFunction, Space, SpaceField, SpaceFunction, VectorField
from .linalg import combine, kernel


def vec_function(F, tag="") -> dict:
    """(tag, component, monomial) -> coefficient."""
    if isinstance(F, ChartFunction):
        return {(tag, 0, m): c for m, c in F.terms.items()}
    return {(tag, k, m): c for k, p in enumerate(F.parts) for m, c in p.terms.items()}


def vec_field(X, tag="") -> dict:
    """(tag, component, frame index, monomial) -> coefficient."""
    parts = [X] if isinstance(X, VectorField) else X.parts
    out = {}
    for k, p in enumerate(parts):
        for j, a in enumerate(p.coeffs):
            for m, c in a.terms.items():
                out[(tag, k, j, m)] = c
    return out


def merge(*vecs: dict) -> dict:
    out = {}
    for v in vecs:
        out.update(v)
    return out


def function_basis(chart: Chart, d: int) -> list[ChartFunction]:
    return [chart.monomial(m) for m in chart.monomial_basis(d)]


def space_function_basis(space: Space, d: int) -> list[SpaceFunction]:
    out = []
    for k, chart in enumerate(space.charts):
        for f in function_basis(chart, d):
            parts = [c.zero() for c in space.charts]
            parts[k] = f
            out.append(SpaceFunction(space, parts))
    return out


def field_basis(chart: Chart, d: int) -> list[VectorField]:
    out = []
    n = len(chart.derivations)
    for j in range(n):
        for f in function_basis(chart, d):
            coeffs = [chart.zero()] * n
            coeffs[j] = f
            out.append(VectorField(chart, coeffs))
    return out


def space_field_basis(space: Space, d: int) -> list[SpaceField]:
    out = []
    for k, chart in enumerate(space.charts):
        for X in field_basis(chart, d):
            parts = [VectorField.zero(c) for c in space.charts]
            parts[k] = X
            out.append(SpaceField(space, parts))
    return out


def linear_combination(basis: list, coeffs: dict, zero):
    out = zero
    for j, a in sorted(coeffs.items()):
        out = out + basis[j] * a
    return out


def _cache(P, key, thunk):
    store = P._cache.setdefault("windows", {})
    if key not in store:
        store[key] = thunk()
    return store[key]


def invariant_function_basis(P, d: int) -> list[ChartFunction]:
    """Exact kernel of delta on functions of degree <= d."""
    def build():
        basis = function_basis(P.M, d)
        cols = [vec_function(P.coboundary(f)) for f in basis]
        K = kernel(cols, P.M.field)
        return [linear_combination(basis, v, P.M.zero()) for v in K]
    return _cache(P, ("invariant_functions", d), build)


def multiplicative_function_basis(P, d: int) -> list[SpaceFunction]:
    """Exact kernel of m^* - pr1^* - pr2^* on arrow functions of degree <= d."""
    def build():
        basis = space_function_basis(P.G, d)
        cols = []
        for F in basis:
            cols.append(vec_function(P.m.pullback(F) - P.pr1.pullback(F) - P.pr2.pullback(F)))
        K = kernel(cols, P.M.field)
        return [linear_combination(basis, v, P.G.zero()) for v in K]
    return _cache(P, ("multiplicative_functions", d), build)


def _mult_constraints(P, X: SpaceField, XM: VectorField) -> dict:
    """All relatedness defects of (X, X_M), as one vector; zero iff multiplicative."""
    Xm = P.Mspace.field(XM)
    vecs = []
    for tag, mp, a, b in (("s", P.s, X, Xm), ("t", P.t, X, Xm)):
        for comp, gen, diff in mp.relatedness_defects(a, b):
            vecs.append({(tag, comp, gen, m): c for m, c in diff.terms.items()})
    XX = P.pair_field(X, X)
    for tag, mp in (("pr1", P.pr1), ("pr2", P.pr2), ("m", P.m)):
        for comp, gen, diff in mp.relatedness_defects(XX, X):
            vecs.append({(tag, comp, gen, m): c for m, c in diff.terms.items()})
    return merge(*vecs)


def multiplicative_field_basis(P, d: int) -> list:
    """Exact basis of multiplicative (X, X_M) with every coefficient of degree <= d."""
    from ..multcalc.elements import MultVectorField

    def build():
        GX = space_field_basis(P.G, d)
        MX = field_basis(P.M, d)
        zG, zM = P.G.zero_field(), VectorField.zero(P.M)
        cols = [_mult_constraints(P, X, zM) for X in GX]
        cols += [_mult_constraints(P, zG, Y) for Y in MX]
        K = kernel(cols, P.M.field)
        n = len(GX)
        out = []
        for v in K:
            X = linear_combination(GX, {j: a for j, a in v.items() if j < n}, zG)
            Y = linear_combination(MX, {j - n: a for j, a in v.items() if j >= n}, zM)
            out.append(MultVectorField(P, X, Y))
        return out
    return _cache(P, ("multiplicative_fields", d), build)


def section_basis(A, d: int) -> list:
    out = []
    for k in range(A.rank):
        for f in function_basis(A.M, d):
            coeffs = [A.M.zero()] * A.rank
            coeffs[k] = f
            out.append(A.section(coeffs))
    return out


def vec_section(alpha, tag="") -> dict:
    return {(tag, j, m): c for j, a in enumerate(alpha.coeffs) for m, c in a.terms.items()}


def vec_mult_field(X, tag="") -> dict:
    return merge(vec_field(X.X, (tag, "G")), vec_field(X.XM, (tag, "M")))


def vec_derivation(D, tag="") -> dict:
    out = vec_field(D.symbol, (tag, "symbol"))
    for k, v in enumerate(D.values):
        out.update(vec_section(v, (tag, "value", k)))
    return out
