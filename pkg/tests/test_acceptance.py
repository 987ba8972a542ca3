"""Acceptance criteria 1-10; a summary line per criterion is printed at the end of the run."""

import pytest

from stackcalc.algebroid import verify_vanest_square
from stackcalc.cli import main
from stackcalc.cohomology import (MORITA_PAIRS, degree_window, derivation_solver, h_minus_one,
                                  lie_rinehart_check, molino_analysis, morita_compare)
from stackcalc.groupoid import build_example, gallery_names
from stackcalc.multcalc.suites import hom_category_suite, lemma_suite, module_suite

SAMPLES = 20
GALLERY = gallery_names()


def case_names(report):
    return {c["case"] for c in report["cases"]}


def failing(report):
    return [c for c in report["cases"] if not c["passed"]]


C1 = pytest.mark.criterion(1, "aF(a-e), LaF, diff(a-c), lie(a-c) exact on 20 samples per gallery groupoid")


@C1
@pytest.mark.parametrize("name", GALLERY)
def test_c1_lemma_suite(name):
    r = lemma_suite(build_example(name), SAMPLES, seed=0)
    names = case_names(r)
    for prefix in ("aF(a)", "aF(b)", "aF(c)", "aF(d)", "aF(e)", "LaF(a)", "LaF(b)",
                   "diff(a)", "diff(b)", "diff(c)", "lie(a)", "lie(b)", "lie(c)"):
        assert any(n.startswith(prefix) for n in names), prefix
    assert all(c["samples"] == SAMPLES for c in r["cases"])
    assert r["passed"], failing(r)


C2 = pytest.mark.criterion(2, "dg-module identities for the bullet action, with [[alpha,beta]].y = 0")


@C2
@pytest.mark.parametrize("name", GALLERY)
def test_c2_dg_module(name):
    r = module_suite(build_example(name), SAMPLES, seed=0)
    names = case_names(r)
    assert {"degree -2: [[alpha,beta]] . f = 0", "degree -2: [[alpha,beta]] . F = 0"} <= names
    assert any(n.startswith("chain map") for n in names)
    assert r["passed"], failing(r)


C3 = pytest.mark.criterion(3, "Van Est square in all four degree cases, VE o partial = ad, oVE o delta = dA")


@C3
@pytest.mark.parametrize("name", GALLERY)
def test_c3_vanest_square(name):
    r = verify_vanest_square(build_example(name), SAMPLES, seed=0)
    assert {"(alpha, f)", "(alpha, F)", "(X, f)", "(X, F)", "VE o partial = ad",
            "oVE o delta = dA"} <= case_names(r)
    assert r["passed"], failing(r)


@pytest.mark.criterion(4, "Z2 reflection at d = 4: {1, x^2, x^4}, {x d_x, x^3 d_x}, D(x^2) = 2 not in image")
def test_c4_z2():
    G = build_example("z2-reflection")
    W = degree_window(G, 4)
    assert [str(f) for f in W.invariant_functions] == ["1", "x^2", "x^4"]
    assert [str(X.XM) for X in W.h_zero_representatives] == ["x*d_x", "x^3*d_x"]
    dec = derivation_solver(G, 4, ["0", "2", "(* 4 (^ x 2))"])
    assert not dec.leibniz_defects
    assert not dec.in_image and dec.obstruction_value == 1


@pytest.mark.criterion(5, "bundle of tori and circle group: windowed H^-1 contains the frame section")
@pytest.mark.parametrize("name", ["circle-group", "torus-bundle-R"])
def test_c5_h_minus_one(name):
    H = [str(a) for a in h_minus_one(build_example(name), 4)]
    assert "e_th" in H


@pytest.mark.criterion(6, "Molino algebroid, d <= 6: constant invariants, H^0 = <-l1 d_th0 + l0 d_th1>, Lbar = 0")
@pytest.mark.parametrize("d", range(1, 7))
def test_c6_molino(d):
    r = molino_analysis(d)
    assert r["invariants"] == ["1"] and r["invariants_constant"]
    assert r["h0_dim"] == 1 and r["h0_basis"] == ["(-l1)*d_th0 + (l0)*d_th1"]
    assert r["tau"]["nonzero_class"] and r["lbar_zero"]


@pytest.mark.criterion(7, "submersion(R^2 -> R) -> unit(R): H^0 dims = d + 1, phi^* bijective, module compatibility")
@pytest.mark.parametrize("d", [2, 3, 4])
def test_c7_morita(d):
    r = morita_compare(MORITA_PAIRS["submersion-R2-R->unit-R"](), d, SAMPLES, seed=0)
    assert r["h0_fields"]["source"] == r["h0_fields"]["target"] == d + 1
    assert r["h0_fields"]["inclusion_iso"] and r["h0_fields"]["projection_iso"]
    assert r["h0_functions"]["pullback_bijective"]
    case = next(c for c in r["cases"] if c["case"].startswith("phi^*(L_{phi(X)} F)"))
    assert case["passed"] and case["samples"] == SAMPLES
    assert r["passed"]


@pytest.mark.criterion(8, "graded Leibniz and Lbar morphism properties; unit groupoid gives the Lie derivative")
@pytest.mark.parametrize("name", GALLERY)
def test_c8_lie_rinehart(name):
    r = lie_rinehart_check(build_example(name), 4, SAMPLES, seed=0)
    names = case_names(r)
    assert {"Lbar[[X,Y]] = [Lbar X, Lbar Y]", "Lbar(r X) = r Lbar(X)"} <= names
    assert sum(n.startswith("grLeib") for n in names) == 4
    if name == "unit-R":
        assert "unit groupoid: Lbar(X)(f) = L_X f" in names
    assert r["passed"], failing(r)


@pytest.mark.criterion(9, "Hom category: (x', y') o (x, y) = (x + x', y) matches vertical composition")
@pytest.mark.parametrize("name", GALLERY)
def test_c9_hom_category(name):
    r = hom_category_suite(build_example(name), SAMPLES, seed=0)
    case = next(c for c in r["cases"] if c["case"] == "composition matches vertical composition")
    assert case["samples"] == SAMPLES
    assert r["passed"], failing(r)


@pytest.mark.criterion(10, "two gallery runs with the same seed give byte-identical reports")
def test_c10_determinism(tmp_path):
    outs = [tmp_path / "a.json", tmp_path / "b.json"]
    codes = [main(["run", "gallery", "--seed", "5", "--format", "json", "--output", str(p)])
             for p in outs]
    assert codes == [0, 0]
    assert outs[0].read_bytes() == outs[1].read_bytes()
