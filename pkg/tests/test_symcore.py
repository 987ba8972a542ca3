from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from stackcalc.symcore import (Chart, ChartError, ExprError, MapError, SmoothMap, VectorField,
                               function_to_prefix, identity_map, parse_function, scalar_field)

from conftest import to_sympy

R = Chart(["x"], name="R")
R2 = Chart(["x", "y"], name="R2")
S1 = Chart([], [("th", "c", "s")], name="S1")
XS = Chart(["x"], [("th", "c", "s")], name="RxS1")
T2 = Chart([], [("th0", "c0", "s0"), ("th1", "c1", "s1")], name="T2")


# -- normal form ------------------------------------------------------------

def test_sine_square_rewrites():
    assert S1.parse("(^ s 2)") == S1.parse("(- 1 (^ c 2))")
    assert str(S1.parse("(^ s 2)")) in ("-c^2 + 1", "1 - c^2")


def test_zero_coefficients_pruned():
    assert R2.parse("(+ x (* 0 y))") == R2.gen("x")


def test_sine_cube():
    assert S1.parse("(^ s 3)") == S1.parse("(- s (* (^ c 2) s))")


def _sympy_normal_form(expr):
    c, s = sympy.symbols("c s")
    _, r = sympy.reduced(sympy.expand(expr), [s**2 + c**2 - 1], s, c, sympy.Symbol("x"), order="lex")
    return sympy.expand(r)


small = st.integers(-3, 3)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small, monos), max_size=6))
def test_normal_form_matches_groebner_remainder(terms):
    x, c, s = sympy.symbols("x c s")
    expr = sum((k * x**a * c**b * s**e for k, (a, b, e) in terms), sympy.Integer(0))
    parts = [f"(* {k} (^ x {a}) (^ c {b}) (^ s {e}))" for k, (a, b, e) in terms]
    f = XS.parse("(+ " + " ".join(parts) + ")") if parts else XS.zero()
    assert sympy.expand(to_sympy(f) - _sympy_normal_form(expr)) == 0
    assert all(m[XS.index("s")] <= 1 for m in f.terms)


def test_parameters_are_independent():
    K = scalar_field(("l0", "l1"))
    T = Chart([], [("th0", "c0", "s0")], field=K)
    l0, l1 = T.param("l0"), T.param("l1")
    for m, n in [(1, 0), (0, 1), (2, -3), (5, 7)]:
        assert not (l0 * m + l1 * n).is_zero()
    assert (l0 * 0 + l1 * 0).is_zero()


def test_scalar_field_arithmetic_canonical():
    K = scalar_field(("l0", "l1"))
    a, b = K.param("l0"), K.param("l1")
    assert (a / b) * (b / a) == K.one
    assert K.to_str((a + b) / (a + b)) == "1"
    assert "." not in K.to_str(K(Fraction(3, 7)) * a)


# -- prefix grammar ----------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small, monos), max_size=6))
def test_prefix_round_trip(terms):
    parts = [f"(* {k} (^ x {a}) (^ c {b}) (^ s {e}))" for k, (a, b, e) in terms]
    f = XS.parse("(+ " + " ".join(parts) + ")") if parts else XS.zero()
    text = function_to_prefix(f)
    assert parse_function(XS, text) == f
    assert function_to_prefix(parse_function(XS, text)) == text


def test_prefix_round_trip_with_parameters():
    K = scalar_field(("l0", "l1"))
    T = Chart([], [("th0", "c0", "s0")], field=K)
    f = T.parse("(+ (* (/ l0 (+ l1 1)) c0) (* -2 l1 s0))")
    assert parse_function(T, f.to_prefix()) == f


@pytest.mark.parametrize("text", ["(+ x", "(^ x -1)", "(/ x y)", "(foo x)", "q", "()", "(/ x 0)"])
def test_parse_errors(text):
    with pytest.raises(ExprError):
        R2.parse(text)


def test_duplicate_coordinates_rejected():
    with pytest.raises(ChartError):
        Chart(["x", "x"])


# -- maps ----------------------------------------------------------------

def test_pullback_examples():
    P = Chart(["x", "y"])
    Z = Chart(["z"])
    s = SmoothMap(P, Z, {"z": "y"})
    assert s.pullback(Z.parse("(^ z 2)")) == P.parse("(^ y 2)")
    u = SmoothMap(Z, P, {"x": "z", "y": "z"})
    assert u.pullback(P.parse("(- x y)")).is_zero()


def test_angle_addition_pullback():
    G2 = Chart([], [("th1", "c1", "s1"), ("th2", "c2", "s2")])
    m = SmoothMap(G2, S1, {"c": "(- (* c1 c2) (* s1 s2))", "s": "(+ (* s1 c2) (* c1 s2))"})
    assert m.pullback(S1.gen("c")) == G2.parse("(- (* c1 c2) (* s1 s2))")


def test_circle_images_must_stay_on_circle():
    with pytest.raises(MapError):
        SmoothMap(R, S1, {"c": "x", "s": "0"})


def test_pullback_is_ring_homomorphism_and_functorial():
    phi = SmoothMap(R2, R2, {"x": "(+ x (* y y))", "y": "(- y)"})
    psi = SmoothMap(R2, R, {"x": "(* x y)"})
    f, g = R.parse("(+ x (^ x 3))"), R.parse("(- 2 x)")
    assert psi.pullback(f * g) == psi.pullback(f) * psi.pullback(g)
    assert psi.pullback(f + g) == psi.pullback(f) + psi.pullback(g)
    assert psi.compose(phi).pullback(f) == phi.pullback(psi.pullback(f))


# -- vector fields -----------------------------------------------------------

def vf(chart, **coeffs):
    return VectorField.from_mapping(chart, coeffs)


def test_lie_derivative_examples():
    assert vf(R, x="x").apply(R.parse("(^ x 2)")) == R.parse("(* 2 (^ x 2))")
    assert vf(S1, th=1).apply(S1.gen("c")) == -S1.gen("s")
    assert vf(S1, th=1).apply(S1.parse("(* c s)")) == S1.parse("(- (^ c 2) (^ s 2))")


def test_bracket_examples():
    dx = vf(R, x=1)
    assert dx.bracket(vf(R, x="x")) == dx
    X = vf(R2, x="(* x y)", y="(^ x 2)")
    assert X.bracket(X).is_zero()
    assert vf(T2, th0=1).bracket(vf(T2, th1=1)).is_zero()


def test_pushforward_examples():
    P = Chart(["x", "y"])
    i = SmoothMap(P, P, {"x": "y", "y": "x"})
    assert i.pushforward(vf(P, x=1), i) == vf(P, y=1)
    ident = identity_map(R2)
    X = vf(R2, x="(* x y)", y=3)
    assert ident.pushforward(X, ident) == X
    sigma = SmoothMap(R, R, {"x": "(- x)"})
    assert sigma.pushforward(vf(R, x="x"), sigma) == vf(R, x="x")


coef = st.lists(st.tuples(small, st.integers(0, 2), st.integers(0, 1), st.integers(0, 1)), max_size=4)


def _fn(terms):
    parts = [f"(* {k} (^ x {a}) (^ c {b}) (^ s {e}))" for k, a, b, e in terms]
    return XS.parse("(+ " + " ".join(parts) + ")") if parts else XS.zero()


def _field(a, b):
    return VectorField(XS, [_fn(a), _fn(b)])


@settings(max_examples=40, deadline=None)
@given(coef, coef, coef, coef, coef, coef)
def test_leibniz_and_bracket_identities(a, b, c, d, f, g):
    X, Y, Z = _field(a, b), _field(c, d), _field(f, g)
    F, H = _fn(a), _fn(d)
    assert X.apply(F * H) == X.apply(F) * H + F * X.apply(H)
    lhs = X.bracket(Y * F)
    rhs = Y * X.apply(F) + X.bracket(Y) * F
    assert lhs == rhs
    jac = X.bracket(Y.bracket(Z)) + Y.bracket(Z.bracket(X)) + Z.bracket(X.bracket(Y))
    assert jac.is_zero()


def test_derivation_frame_round_trip():
    X = vf(XS, x="(* x c)", th="s")
    values = {g: X.apply(XS.gen(g)) for g in XS.gens}
    assert VectorField.from_derivation(XS, values) == X
