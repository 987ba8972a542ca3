from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from stackcalc.algebroid import lie_algebroid_of, molino_algebroid
from stackcalc.cohomology import (MORITA_PAIRS, PROPER, Echelon, GroupoidMorphism, algebroid_report,
                                  anchor_map_Lbar, cohomology_report, degree_window,
                                  derivation_solver, h_minus_one, identity_morphism,
                                  invariant_fields, invariant_functions, kernel, lbar_rank_data,
                                  lie_rinehart_check, molino_analysis, morita_compare, obstruction,
                                  proper_crosscheck, quotient, rank, solve, vanest_window_check)
from stackcalc.cohomology.linalg import apply_functional
from stackcalc.groupoid import PresentationError, build_example, gallery_names
from stackcalc.multcalc import MultVectorField, bracket2
from stackcalc.multcalc.elements import as_presentation
from stackcalc.symcore import QQ_FIELD, SmoothMap, SpaceMap, VectorField, scalar_field

from conftest import to_sympy


def strs(xs):
    return [str(x) for x in xs]


# -- exact linear algebra against sympy ------------------------------------------

matrices = st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=6))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_and_kernel_match_sympy(cols):
    columns = [{i: Fraction(v) for i, v in enumerate(c) if v} for c in cols]
    n_rows = len(cols[0])
    M = sympy.Matrix(n_rows, len(cols), lambda i, j: cols[j][i])
    assert rank(columns) == M.rank()
    K = kernel(columns)
    assert len(K) == len(cols) - M.rank()
    for v in K:
        x = sympy.Matrix([sympy.Rational(v.get(j, 0)) for j in range(len(cols))])
        assert M * x == sympy.zeros(n_rows, 1)


@settings(max_examples=80, deadline=None)
@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_or_obstruct(cols, rhs):
    n_rows = len(cols[0])
    columns = [{i: Fraction(v) for i, v in enumerate(c) if v} for c in cols]
    b = {i: Fraction(v) for i, v in enumerate(rhs[:n_rows]) if v}
    x = solve(columns, b)
    if x is not None:
        total = {}
        for j, a in x.items():
            for i, v in columns[j].items():
                total[i] = total.get(i, 0) + a * v
        assert {i: v for i, v in total.items() if v} == b
    else:
        y = obstruction(columns, b)
        assert apply_functional(y, b) == 1
        assert all(apply_functional(y, c) == 0 for c in columns)


def test_linear_algebra_over_parameters():
    K = scalar_field(("l0", "l1"))
    a, b = K.param("l0"), K.param("l1")
    cols = [{0: a, 1: b}, {0: b, 1: -a}, {0: a + b, 1: b - a}]
    assert Echelon(cols, K).rank == 2
    assert len(kernel(cols, K)) == 1
    assert quotient([cols[2]], cols[:2], K) == (0, [])


def test_quotient_representatives():
    e = lambda i: {i: Fraction(1)}  # noqa: E731
    dim, reps = quotient([e(0), e(1), {0: Fraction(1), 1: Fraction(1)}, e(2)], [e(1)])
    assert dim == 2 and reps == [0, 3]


# -- invariant functions against an independent substitution oracle ---------------

def _sympy_invariants(d, t_sub, s_sub, base, arrow_vars):
    coeffs = sympy.symbols(f"a0:{d + 1}")
    z = sympy.Symbol(base)
    f = sum(c * z**k for k, c in enumerate(coeffs))
    eqs = sympy.Poly(sympy.expand(f.subs(z, t_sub) - f.subs(z, s_sub)), *arrow_vars).coeffs()
    sol = sympy.solve(eqs, coeffs, dict=True)
    free = [c for c in coeffs if not sol or c not in sol[0]]
    return len(free)


def test_invariant_function_examples():
    Z = invariant_functions(build_example("z2-reflection"), 4)
    assert strs(Z) == ["1", "x^2", "x^4"]
    assert strs(invariant_functions(build_example("pair-R"), 4)) == ["1"]
    assert strs(invariant_functions(build_example("unit-R"), 2)) == ["1", "x", "x^2"]


def test_invariant_dimensions_match_oracle():
    x, y = sympy.symbols("x y")
    # pair(R): t = x, s = y
    assert _sympy_invariants(4, x, y, "z", [x, y]) == len(invariant_functions(build_example("pair-R"), 4))
    # reflection arrow: t = -x, s = x
    assert _sympy_invariants(4, -x, x, "x", [x]) == len(
        invariant_functions(build_example("z2-reflection"), 4))


def test_invariant_fields_examples():
    Z = invariant_fields(build_example("z2-reflection"), 3)
    assert [str(X.XM) for X in Z["representatives"]] == ["x*d_x", "x^3*d_x"]
    assert Z["partial_image"] == [] and Z["window_relative"]
    P = invariant_fields(build_example("pair-R"), 2)
    assert P["representatives"] == [] and len(P["partial_image"]) == 3
    assert strs(h_minus_one(build_example("circle-group"), 4)) == ["e_th"]


@pytest.mark.parametrize("name", gallery_names())
@pytest.mark.parametrize("d", [2, 4, 6])
def test_kernels_exact_by_filtration(name, d):
    W = degree_window(build_example(name), d)
    assert W.delta_filtered and W.partial_filtered
    P = as_presentation(build_example(name))
    for f in W.invariant_functions:
        assert P.coboundary(f).is_zero() and f.degree() <= d
    for a in W.h_minus_one:
        from stackcalc.multcalc import partial
        assert partial(a).is_zero()


def test_window_relative_flags():
    W = degree_window(build_example("pair-R"), 3)
    assert W.window_relative["H^0 of X_m"] and W.window_relative["H^1 of C_m"]
    assert not W.window_relative["H^-1"]


# -- anchor map and the derivation solver ------------------------------------

def test_lbar_examples():
    G = build_example("z2-reflection")
    W = degree_window(G, 4)
    X = W.h_zero_representatives[0]
    assert str(X.XM) == "x*d_x"
    assert strs(anchor_map_Lbar(G, X, 4)) == ["0", "2*x^2", "4*x^4"]
    C = build_example("circle-group")
    alpha = h_minus_one(C, 4)[0]
    assert all(v.is_zero() for v in anchor_map_Lbar(C, alpha, 4))
    data = lbar_rank_data(C, 4)
    assert data["h_minus_one_dim"] == 1 and not data["injective"]


def test_z2_derivation_not_in_image():
    G = build_example("z2-reflection")
    dec = derivation_solver(G, 4, ["0", "2", "(* 4 (^ x 2))"])
    assert not dec.in_image and not dec.leibniz_defects
    assert dec.obstruction_value == 1
    assert dec.to_dict()["obstruction_functional"] == [["x^2", "1", "1/2"]]


def test_image_generator_is_its_own_witness():
    G = build_example("z2-reflection")
    dec = derivation_solver(G, 4, ["0", "(* 2 (^ x 2))", "(* 4 (^ x 4))"])
    assert dec.in_image
    assert dec.witness == {"({e: x*d_x, sigma: x*d_x}; base x*d_x)": 1}


def test_unit_groupoid_window_surjective():
    G = build_example("unit-R")
    for phi in ["1", "x", "(+ 1 (* -2 x))"]:
        X = VectorField.from_mapping(G.M, {"x": phi})
        vals = [X.apply(f) for f in invariant_functions(G, 4)]
        assert derivation_solver(G, 4, vals).in_image


def test_inconsistent_derivation_data_reported():
    G = build_example("z2-reflection")
    dec = derivation_solver(G, 4, ["0", "1", "0"])
    assert dec.leibniz_defects
    with pytest.raises(ValueError):
        derivation_solver(G, 4, ["0", "1"])


# -- Lie-Rinehart -------------------------------------------------------------

def test_lie_rinehart_gallery(gallery_example):
    r = lie_rinehart_check(gallery_example, 4, samples=5, seed=2)
    assert r["passed"], [c for c in r["cases"] if not c["passed"]]


def test_lie_rinehart_unit_collapses_to_lie_derivative():
    r = lie_rinehart_check(build_example("unit-R"), 4, samples=5, seed=0)
    assert r["unit_groupoid"]
    assert any(c["case"].startswith("unit groupoid") and c["passed"] for c in r["cases"])


def test_graded_leibniz_z2_sample():
    G = as_presentation(build_example("z2-reflection"))
    M = G.M
    f = M.parse("(^ x 2)")
    X = MultVectorField.lift(G, VectorField.from_mapping(M, {"x": "x"}))
    Y = MultVectorField.lift(G, VectorField.from_mapping(M, {"x": "(^ x 3)"}))
    fY = MultVectorField(G, Y.X * G.t_pull(f), Y.XM * f)
    lhs = bracket2(X, fY)
    rhs = MultVectorField(G, Y.X * G.t_pull(X.XM.apply(f)), Y.XM * X.XM.apply(f))
    rhs = rhs + MultVectorField(G, bracket2(X, Y).X * G.t_pull(f), bracket2(X, Y).XM * f)
    assert lhs == rhs


# -- Morita -------------------------------------------------------------------

@pytest.mark.parametrize("key", sorted(MORITA_PAIRS))
def test_morita_pairs(key):
    r = morita_compare(MORITA_PAIRS[key](), 4, samples=5, seed=0)
    assert r["passed"], r


def test_submersion_morita_dimensions():
    for d in (2, 3, 4):
        r = morita_compare(MORITA_PAIRS["submersion-R2-R->unit-R"](), d, samples=3, seed=1)
        assert r["h0_fields"]["source"] == r["h0_fields"]["target"] == d + 1
        assert r["h0_functions"]["pullback_bijective"]


@pytest.mark.parametrize("name", ["pair-R", "z2-reflection", "torus-bundle-R"])
def test_identity_morphisms(name):
    assert morita_compare(identity_morphism(build_example(name)), 3, samples=3)["passed"]


def test_non_morphism_rejected():
    G = as_presentation(build_example("pair-R"))
    H = as_presentation(build_example("unit-R"))
    arrows = SpaceMap.single(G.G, H.G, SmoothMap(G.G.chart, H.G.chart, {"x": "(* x y)"}))
    base = SmoothMap(G.M, H.M, {"x": "z"})
    with pytest.raises(PresentationError):
        morita_compare(GroupoidMorphism(G, H, arrows, base), 2)


# -- proper sub-gallery, Van-Est windows, Molino --------------------------------

@pytest.mark.parametrize("name", PROPER)
def test_proper_crosscheck(name):
    r = proper_crosscheck(build_example(name), 4)
    assert r["passed"], r


def test_non_proper_example_has_windowed_h1():
    r = proper_crosscheck(build_example("real-line-group"), 4)
    assert r["h_one_window"] == ["g"] and not r["h_one_zero"]


def test_vanest_windows_source_simply_connected():
    r = vanest_window_check(build_example("pair-R"), 4)
    assert r["passed"] and r["oVE_injective"] and r["VE_injective"]


def test_vanest_windows_detect_circle_fibers():
    r = vanest_window_check(build_example("pair-S1"), 4)
    assert not r["passed"] and "{th0: 1}" in r["cocycles_without_preimage"]


@pytest.mark.parametrize("d", [2, 4, 6])
def test_molino(d):
    r = molino_analysis(d)
    assert r["passed"], r
    assert r["invariants"] == ["1"] and r["h0_dim"] == 1 and r["lbar_zero"]
    assert r["h0_basis"] == ["(-l1)*d_th0 + (l0)*d_th1"]


# -- reports ------------------------------------------------------------------

def test_z2_report_content():
    r = cohomology_report(build_example("z2-reflection"), 4)
    assert r["bases"]["invariant_functions"] == ["1", "x^2", "x^4"]
    assert len(r["bases"]["H^0 of X_m"]) == 2
    cert = r["certificates"]["derivation_probe"]
    assert cert["in_image"] is False and cert["obstruction_on_target"] == "1"
    assert r["passed"]


def test_report_matrices_are_exact_sparse_triplets():
    r = cohomology_report(build_example("pair-R"), 3)
    m = r["matrices"]["delta"]
    assert m["entries"] == sorted(m["entries"])
    for i, j, v in m["entries"]:
        assert isinstance(v, str) and "." not in v
        assert 0 <= i < len(m["rows"]) and 0 <= j < len(m["columns"])


def test_torus_bundle_report_certifies_non_injectivity():
    r = cohomology_report(build_example("torus-bundle-R"), 4)
    assert r["verdicts"]["H^-1_nonzero"] and r["certificates"]["non_injectivity"]["kernel_vector"] == "e_th"


def test_algebroid_report_molino():
    r = algebroid_report(molino_algebroid(), 4)
    assert r["passed"] and r["bases"]["H^0 of X_m"] == ["<sigma = (-l1)*d_th0 + (l0)*d_th1; D(e_e) = 0>"]
    assert r["verdicts"]["lbar_zero"]
