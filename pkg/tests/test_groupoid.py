import json

import pytest

from stackcalc.groupoid import (HomMorphism, PresentationError, build_example, compose_hom_category,
                                gallery_names, identity, is_multiplicative_function,
                                is_multiplicative_vector_field, multiplicativity_defect,
                                naturality_defect, presentation_of)
from stackcalc.groupoid.io import (FormatError, algebroid_from_json, algebroid_to_json, dumps,
                                   groupoid_from_json, groupoid_to_json, load)
from stackcalc.multcalc.ops import delta
from stackcalc.multcalc.sampling import Sampler
from stackcalc.symcore import VectorField

SINGLE = [n for n in gallery_names() if n != "z2-reflection"]


def test_gallery_validates(gallery_example):
    P = presentation_of(gallery_example)
    report = P.validate_axioms()
    assert report.ok, [r.to_dict() for r in report.failures()]


def test_action_groupoid_checks():
    G = build_example("z2-reflection")
    assert G.check() == []
    assert len(presentation_of(G).G) == 2


def test_gallery_aliases():
    assert build_example("pair(R)") is build_example("pair-R")
    with pytest.raises(KeyError):
        build_example("klein-bottle")


def test_submersion_structure_maps():
    P = build_example("submersion-R2-R")
    G, M = P.G.chart, P.M
    assert P.s.pullback(P.Mspace.function([M.gen("y")])).only == G.gen("yp")
    assert P.t.pullback(P.Mspace.function([M.gen("y")])).only == G.gen("y")
    G2 = P.G2.chart
    assert P.m.parts[0][1].image("yp") == G2.gen("y2")


def test_corrupted_multiplication_fails_target_axiom():
    doc = groupoid_to_json(build_example("pair-R"))
    doc["maps"]["m"] = {"x": "y", "y": "w"}
    report = groupoid_from_json(doc).validate_axioms()
    assert not report.ok
    bad = report["t o m = t o pr1"]
    assert not bad.passed and bad.difference


def test_delta_f_is_multiplicative(gallery_example):
    S = Sampler(gallery_example, seed=3)
    for _ in range(10):
        assert is_multiplicative_function(S.P, delta(S.P, S.function()))


# -- multiplicativity predicates ------------------------------------------------

def test_pair_multiplicative_functions():
    P = build_example("pair-R")
    G = P.G.chart
    assert is_multiplicative_function(P, G.parse("(- x y)"))
    v = is_multiplicative_function(P, G.parse("(* x y)"))
    assert not v
    G2 = P.G2.chart
    # m^*F - pr1^*F - pr2^*F for F = xy on (x, y, w)
    assert multiplicativity_defect(P, G.parse("(* x y)")).only == G2.parse("(- (* x w) (* x y) (* y w))")


def test_sine_is_not_multiplicative():
    P = build_example("circle-group")
    v = is_multiplicative_function(P, P.G.chart.gen("s"))
    assert not v
    G2 = P.G2.chart
    assert multiplicativity_defect(P, P.G.chart.gen("s")).only == G2.parse(
        "(- (+ (* s1 c2) (* c1 s2)) s1 s2)")


def test_pair_multiplicative_fields():
    P = build_example("pair-R")
    G, M = P.G.chart, P.M
    dz = VectorField.from_mapping(M, {"z": 1})
    X = P.G.field([VectorField.from_mapping(G, {"x": 1, "y": 1})])
    assert is_multiplicative_vector_field(P, X, dz)
    X = P.G.field([VectorField.from_mapping(G, {"x": 1})])
    assert not is_multiplicative_vector_field(P, X, dz)


def test_z2_odd_fields_are_multiplicative():
    G = build_example("z2-reflection")
    M = G.M
    assert is_multiplicative_vector_field(G, VectorField.from_mapping(M, {"x": "x"}))
    assert not is_multiplicative_vector_field(G, VectorField.from_mapping(M, {"x": "(^ x 2)"}))


# -- Hom category -------------------------------------------------------------

def test_hom_composition_examples():
    P = build_example("pair-R")
    M = P.M
    F = P.G.zero()
    m1 = HomMorphism(M.gen("z"), F)
    from stackcalc.groupoid.homcat import target
    m2 = HomMorphism(M.parse("(^ z 2)"), target(P, m1))
    comp = compose_hom_category(P, m1, m2)
    assert comp.f == M.parse("(+ z (^ z 2))") and comp.F == F
    assert compose_hom_category(P, identity(P, F), m1) == m1
    assert naturality_defect(P, F, M.gen("z"), target(P, m1)).is_zero()


def test_non_composable_rejected():
    P = build_example("pair-R")
    M = P.M
    m1 = HomMorphism(M.gen("z"), P.G.zero())
    with pytest.raises(PresentationError):
        compose_hom_category(P, m1, HomMorphism(M.gen("z"), P.G.zero()))


# -- JSON documents ------------------------------------------------------------

@pytest.mark.parametrize("name", SINGLE)
def test_groupoid_json_round_trip(name):
    doc = groupoid_to_json(build_example(name))
    text = dumps(doc)
    again = groupoid_from_json(json.loads(text))
    assert dumps(groupoid_to_json(again)) == text
    assert again.validate_axioms().ok


def test_algebroid_json_round_trip():
    from stackcalc.algebroid import lie_algebroid_of, molino_algebroid
    for A in (molino_algebroid(), lie_algebroid_of(build_example("pair-S1"))):
        doc = algebroid_to_json(A)
        B = algebroid_from_json(json.loads(dumps(doc)))
        assert algebroid_to_json(B) == doc
        assert B.check() == []


def test_load_dispatches_on_document(tmp_path):
    from stackcalc.algebroid import AlgebroidPresentation, molino_algebroid
    p = tmp_path / "a.json"
    p.write_text(dumps(algebroid_to_json(molino_algebroid())))
    assert isinstance(load(p), AlgebroidPresentation)
    p.write_text(dumps(groupoid_to_json(build_example("pair-R"))))
    assert load(p).name == "pair-R"


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("maps"),
    lambda d: d["maps"].pop("s"),
    lambda d: d["maps"].update(k={"x": "x"}),
    lambda d: d["maps"]["m"].update(x="(+ x"),
    lambda d: d["maps"]["m"].update(x="q"),
    lambda d: d["base_chart"].update(affine=["z", "z"]),
    lambda d: d.update(parameters=[1]),
])
def test_malformed_documents(mutate):
    doc = groupoid_to_json(build_example("pair-R"))
    mutate(doc)
    with pytest.raises(FormatError):
        groupoid_from_json(doc)


def test_unreadable_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    with pytest.raises(FormatError):
        load(p)
