import pytest

from stackcalc.algebroid import lie_algebroid_of
from stackcalc.groupoid import build_example
from stackcalc.multcalc import (GradedFunElement, GradedVFElement, MultVectorField, bracket2, bullet,
                                cm0_action, delta, fun_element, h_cdot, mu, partial, vf_element)
from stackcalc.multcalc import suites
from stackcalc.multcalc.sampling import Sampler
from stackcalc.symcore import ChartError, VectorField


@pytest.fixture(scope="module")
def pair():
    P = build_example("pair-R")
    return P, lie_algebroid_of(P)


def vf(chart, **coeffs):
    return VectorField.from_mapping(chart, coeffs)


def test_delta_examples(pair):
    P, _ = pair
    assert delta(P, P.M.parse("(^ z 2)")).only == P.G.chart.parse("(- (^ x 2) (^ y 2))")
    U = build_example("unit-R")
    assert delta(U, U.M.parse("(+ x (^ x 3))")).is_zero()
    Z = build_example("z2-reflection")
    assert delta(Z, Z.M.parse("(^ x 2)")).is_zero()
    assert not delta(Z, Z.M.parse("x")).is_zero()


def test_partial_examples(pair):
    P, A = pair
    d = A.frame_section(0)
    X = partial(d)
    assert X.X.only == vf(P.G.chart, x=1, y=1)
    assert X.XM == vf(P.M, z=1)
    for name in ("real-line-group", "circle-group"):
        B = lie_algebroid_of(build_example(name))
        assert partial(B.frame_section(0)).is_zero()


def test_bullet_examples(pair):
    P, A = pair
    G = P.G.chart
    F = P.G.function([G.parse("(- x y)")])
    d = A.frame_section(0)
    assert bullet(d, F) == P.M.one()
    assert bullet(d, P.M.gen("z")) is None
    X = MultVectorField(P, P.G.field([vf(G, x=1, y=1)]), vf(P.M, z=1))
    assert bullet(X, F).is_zero()


def test_mu_examples(pair):
    P, A = pair
    G = P.G.chart
    F = P.G.function([G.parse("(- x y)")])
    x = vf_element(P, alpha=A.frame_section(0))
    y = fun_element(P, F=F)
    out = mu(x, y)
    assert out.f == P.M.one() and out.F.is_zero()
    Xz = MultVectorField(P, P.G.field([vf(G, x="x", y="y")]), vf(P.M, z="z"))
    f = P.M.parse("(^ z 3)")
    out = mu(vf_element(P, X=Xz), fun_element(P, f=f))
    assert out.f == Xz.XM.apply(f) and out.F.is_zero()


def test_mu_on_unit_groupoid_is_lie_derivative():
    U = build_example("unit-R")
    S = Sampler(U, seed=5)
    for _ in range(5):
        X, f = S.mult_field(), S.function()
        out = mu(vf_element(U, X=X), fun_element(U, f=f))
        assert out.f == X.XM.apply(f) and out.F.is_zero()


def test_bracket2_examples(pair):
    P, A = pair
    G = P.G.chart
    Xz = MultVectorField(P, P.G.field([vf(G, x="x", y="y")]), vf(P.M, z="z"))
    assert bracket2(Xz, Xz).is_zero()
    d = A.frame_section(0)
    assert bracket2(Xz, d) == -d
    assert bracket2(d, Xz) == d
    assert bracket2(d, d) is None


@pytest.mark.parametrize("name", ["pair-R", "pair-S1", "submersion-R2-R", "torus-bundle-R"])
def test_partial_bracket_matches_algebroid_bracket(name):
    S = Sampler(build_example(name), seed=11)
    for _ in range(8):
        a, b = S.section(), S.section()
        assert bracket2(partial(a), b) == S.A.bracket(a, b)


def test_cm0_action_examples():
    Z = build_example("z2-reflection")
    P = Sampler(Z, 0).P
    X = MultVectorField.lift(P, vf(P.M, x="x"))
    x = vf_element(P, X=X)
    out = cm0_action(P, P.M.parse("(^ x 2)"), x)
    assert out.X.XM == vf(P.M, x="(^ x 3)")
    assert out.X.verdict()
    assert cm0_action(P, P.M.one(), x) == x
    with pytest.raises(Exception):
        cm0_action(P, P.M.gen("x"), x)
    Q, A = build_example("pair-R"), lie_algebroid_of(build_example("pair-R"))
    S = Sampler(Q, 2)
    y = vf_element(Q, alpha=S.section(), X=S.mult_field())
    three = cm0_action(Q, Q.M.const(3), y)
    assert three.alpha == y.alpha * Q.M.const(3) and three.X == y.X.scale(3)


def test_h_cdot_examples():
    R = build_example("real-line-group")
    A = lie_algebroid_of(R)
    F = R.G.function([R.G.chart.gen("g")])
    out = h_cdot(R, F, A.frame_section(0))
    assert out.ok and out.degree == 0
    assert out.representative.X.only == vf(R.G.chart, g="g")
    S = Sampler(build_example("pair-R"), 4)
    assert h_cdot(S.P, S.mult_function(), S.mult_field()).representative is None
    X = S.mult_field()
    assert h_cdot(S.P, S.P.M.one(), X).representative == X


@pytest.mark.parametrize("name", ["submersion-R2-R", "unit-R", "torus-bundle-R"])
def test_h_cdot_independent_of_representative(name):
    S = Sampler(build_example(name), seed=9)
    for _ in range(5):
        f, X, beta = S.invariant_function(), S.mult_field(), S.section()
        shifted = h_cdot(S.P, f, X + partial(beta)).representative
        base = h_cdot(S.P, f, X).representative
        assert shifted - base == partial(beta * f)


def test_non_multiplicative_degree_one_rejected(pair):
    P, _ = pair
    with pytest.raises(ChartError):
        fun_element(P, F=P.G.function([P.G.chart.parse("(* x y)")]))
    G = P.G.chart
    with pytest.raises(ChartError):
        vf_element(P, X=MultVectorField(P, P.G.field([vf(G, x=1)]), vf(P.M, z=1)))


# -- sampled suites over the whole gallery ------------------------------------

def test_lemma_suite(gallery_example):
    r = suites.lemma_suite(gallery_example, samples=6, seed=1)
    assert r["passed"], [c for c in r["cases"] if not c["passed"]]
    assert len(r["cases"]) == 13


def test_module_suite(gallery_example):
    r = suites.module_suite(gallery_example, samples=6, seed=1)
    assert r["passed"], [c for c in r["cases"] if not c["passed"]]
    assert any(c["case"].startswith("degree -2") for c in r["cases"])


def test_hom_category_suite(gallery_example):
    r = suites.hom_category_suite(gallery_example, samples=6, seed=1)
    assert r["passed"], [c for c in r["cases"] if not c["passed"]]


def test_sampler_is_deterministic():
    a, b = Sampler(build_example("pair-S1"), 7), Sampler(build_example("pair-S1"), 7)
    for _ in range(5):
        assert a.mult_function() == b.mult_function()
        assert a.mult_field() == b.mult_field()


# -- negative controls: a broken operation must be caught ----------------------

def test_lemma_suite_detects_mutated_bullet(monkeypatch):
    real = suites.bullet

    def broken(x, y):
        out = real(x, y)
        return out * 2 if isinstance(x, MultVectorField) and out is not None else out
    monkeypatch.setattr(suites, "bullet", broken)
    r = suites.lemma_suite(build_example("pair-R"), samples=4, seed=0)
    assert not r["passed"]
    failed = {c["case"] for c in r["cases"] if not c["passed"]}
    assert any(name.startswith("lie(") for name in failed)


def test_module_suite_detects_mutated_delta(monkeypatch):
    real = suites.delta
    monkeypatch.setattr(suites, "delta", lambda P, f: real(P, f) * 2)
    r = suites.module_suite(build_example("pair-R"), samples=4, seed=0)
    assert not r["passed"]


def test_graded_elements_are_values():
    P = build_example("pair-R")
    S = Sampler(P, 1)
    y = S.fun_element()
    assert isinstance(y, GradedFunElement) and (y - y).is_zero()
    x = S.vf_element()
    assert isinstance(x, GradedVFElement) and (x - x).is_zero()
