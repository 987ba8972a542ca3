import pytest

from stackcalc.algebroid import (AlgebroidError, AlgebroidPresentation, VE, derivation_of_field,
                                 dgla_A_bracket, h_ocdot, im_function_of, lie_algebroid_of,
                                 molino_algebroid, obullet, oVE, restrict_section, right_invariant,
                                 verify_vanest_square, vf_element)
from stackcalc.groupoid import build_example
from stackcalc.multcalc import MultVectorField, fun_element
from stackcalc.multcalc import vf_element as g_vf_element
from stackcalc.multcalc.sampling import Sampler
from stackcalc.symcore import Chart, VectorField


def vf(chart, **coeffs):
    return VectorField.from_mapping(chart, coeffs)


def test_extraction_examples():
    A = lie_algebroid_of(build_example("pair-R"))
    assert A.rank == 1 and A.anchor_fields[0] == vf(A.M, z=1)
    assert all(c.is_zero() for c in A.structure[(0, 0)])
    assert lie_algebroid_of(build_example("z2-reflection")).rank == 0
    C = lie_algebroid_of(build_example("circle-group"))
    assert C.rank == 1 and C.anchor_fields[0].is_zero()
    assert C.bracket(C.frame_section(0), C.frame_section(0)).is_zero()


def test_extracted_algebroids_are_consistent(gallery_example):
    A = lie_algebroid_of(gallery_example)
    assert A.check() == []


@pytest.mark.parametrize("name", ["pair-R", "pair-S1", "submersion-R2-R", "torus-bundle-R",
                                  "real-line-group"])
def test_bracket_two_routes(name):
    """Structure-function bracket against [alpha^r, beta^r] restricted to the units."""
    S = Sampler(build_example(name), seed=13)
    A = S.A
    for _ in range(6):
        a, b = S.section(), S.section()
        upstairs = restrict_section(A, right_invariant(a).bracket(right_invariant(b)))
        assert A.bracket(a, b) == upstairs


def test_dA_examples():
    A = lie_algebroid_of(build_example("pair-R"))
    assert A.dA(A.M.parse("(^ z 2)")).values[0] == A.M.parse("(* 2 z)")
    C = lie_algebroid_of(build_example("circle-group"))
    assert C.dA(C.M.one()).is_zero()
    Mo = molino_algebroid()
    l0 = Mo.M.param("l0")
    assert Mo.dA(Mo.M.gen("c0")).values[0] == -Mo.M.gen("s0") * l0


def test_obullet_examples():
    A = lie_algebroid_of(build_example("pair-R"))
    d = A.frame_section(0)
    assert obullet(d, A.M.gen("z")) is None
    assert obullet(d, A.dA(A.M.parse("(^ z 2)"))) == A.M.parse("(* 2 z)")


def test_obullet_of_ad_two_routes():
    S = Sampler(build_example("submersion-R2-R"), seed=3)
    A = S.A
    for _ in range(5):
        a, b = S.section(), S.section()
        w = A.dA(S.function())
        lhs = obullet(A.ad(a), w)(b)
        rhs = A.anchor(a).apply(w(b)) - w(A.bracket(a, b))
        assert lhs == rhs


def test_dgla_bracket_examples():
    S = Sampler(build_example("pair-S1"), seed=2)
    A = S.A
    for _ in range(5):
        a, b = S.section(), S.section()
        assert A.ad(a).commutator(A.ad(b)) == A.ad(A.bracket(a, b))
        D = A.ad(S.section())
        assert D.commutator(D).is_zero()
        x = vf_element(A, D=D)
        y = vf_element(A, alpha=a)
        assert dgla_A_bracket(x, y).alpha == D(a)


def test_h_ocdot_examples():
    C = lie_algebroid_of(build_example("circle-group"))
    w = C.im_function([C.M.one()])
    e = C.frame_section(0)
    out = h_ocdot(w, e)
    assert out.ok and out.representative.symbol.is_zero()
    assert out.representative.values[0] == e
    D = C.ad(e)
    assert h_ocdot(w, D).representative is None
    A = lie_algebroid_of(build_example("pair-R"))
    D = A.derivation(vf(A.M, z="z"), [A.section(["-1"])])
    assert D.is_derivation()
    assert h_ocdot(A.M.one(), D).representative == D


def test_ve_examples():
    P = build_example("pair-R")
    A = lie_algebroid_of(P)
    G = P.G.chart
    X = MultVectorField(P, P.G.field([vf(G, x="x", y="y")]), vf(P.M, z="z"))
    D = derivation_of_field(A, X)
    assert D.symbol == vf(P.M, z="z")
    assert D.values[0] == -A.frame_section(0)
    U = build_example("unit-R")
    S = Sampler(U, 1)
    for _ in range(3):
        Y = S.mult_field()
        out = VE(g_vf_element(U, X=Y))
        assert out.D.symbol == Y.XM


def test_ove_examples():
    P = build_example("pair-R")
    A = lie_algebroid_of(P)
    F = P.G.function([P.G.chart.parse("(- x y)")])
    w = im_function_of(A, F)
    assert w.values[0] == P.M.one() == A.dA(P.M.gen("z")).values[0]
    assert im_function_of(A, P.G.zero()).is_zero()
    R = build_example("real-line-group")
    B = lie_algebroid_of(R)
    assert im_function_of(B, R.G.function([R.G.chart.gen("g")])).values[0] == R.M.one()
    y = oVE(A, fun_element(P, f=P.M.gen("z"), F=F))
    assert y.f == P.M.gen("z") and y.omega == w


def test_vanest_square(gallery_example):
    r = verify_vanest_square(gallery_example, samples=6, seed=5)
    assert r["passed"], [c for c in r["cases"] if not c["passed"]]
    assert {"(alpha, f)", "(alpha, F)", "(X, f)", "(X, F)"} <= {c["case"] for c in r["cases"]}


def test_direct_presentation_validation():
    M = Chart(["x"])
    bad = AlgebroidPresentation(M, ["a", "b"], [vf(M, x=1), vf(M, x="x")], {("a", "b"): [0, 0]})
    assert bad.check()  # anchor([a,b]) = 0 but [d_x, x d_x] = d_x
    with pytest.raises(AlgebroidError):
        AlgebroidPresentation(M, ["a"], [vf(M, x=1), vf(M, x=1)])


def test_molino_is_abelian_with_irrational_anchor():
    A = molino_algebroid()
    assert A.check() == []
    e = A.frame_section(0)
    assert A.bracket(e, e).is_zero()
    l0, l1 = A.M.param("l0"), A.M.param("l1")
    assert A.anchor_fields[0] == VectorField.from_mapping(A.M, {"th0": l0, "th1": l1})
