"""Built-in example groupoids."""

from __future__ import annotations

from typing import Callable

from ..symcore import Chart, Space, SpaceMap, SmoothMap, identity_map
from .action import DiscreteActionGroupoid
from .presentation import GroupoidPresentation, PresentationError


def _single(chart: Chart, name: str) -> Space:
    return Space.single(chart, name=name)


def _smap(src: Space, dst: Space, images: dict, name: str) -> SpaceMap:
    return SpaceMap.single(src, dst, SmoothMap(src.chart, dst.chart, images, name=name), name=name)


def _slot_chart(M: Chart, n: int, rename: Callable[[str, int], str], name: str) -> Chart:
    affine, circles = [], []
    for k in range(n):
        affine.extend(rename(a, k) for a in M.affine)
        circles.extend((rename(a, k), rename(c, k), rename(s, k)) for a, c, s in M.circles)
    return Chart(affine, circles, field=M.field, name=name)


def pair_groupoid(M: Chart, rename: Callable[[str, int], str] | None = None,
                  name: str | None = None) -> GroupoidPresentation:
    """M x M over M with s = second slot, t = first slot, m((a,b),(b,c)) = (a,c)."""
    if rename is None:
        def rename(g, k):
            return f"{g}{k}"
    charts = {n: _slot_chart(M, n, rename, f"slots{n}") for n in (2, 3, 4)}
    Ms = _single(M, "M")
    G, G2, G3 = (_single(charts[2], "G"), _single(charts[3], "G2"), _single(charts[4], "G3"))

    def to_slots(src: Space, dst_chart: Chart, slots: list[int], nm: str, dst: Space) -> SpaceMap:
        imgs = {}
        for k, j in enumerate(slots):
            for g in M.gens:
                imgs[rename(g, k)] = src.chart.gen(rename(g, j))
        return _smap(src, dst, imgs, nm)

    def to_M(src: Space, slot: int, nm: str) -> SpaceMap:
        return _smap(src, Ms, {g: src.chart.gen(rename(g, slot)) for g in M.gens}, nm)

    s = to_M(G, 1, "s")
    t = to_M(G, 0, "t")
    u = _smap(Ms, G, {rename(g, k): M.gen(g) for g in M.gens for k in (0, 1)}, "u")
    i = to_slots(G, charts[2], [1, 0], "i", G)
    pr1 = to_slots(G2, charts[2], [0, 1], "pr1", G)
    pr2 = to_slots(G2, charts[2], [1, 2], "pr2", G)
    m = to_slots(G2, charts[2], [0, 2], "m", G)
    q1 = to_slots(G3, charts[2], [0, 1], "q1", G)
    q2 = to_slots(G3, charts[2], [1, 2], "q2", G)
    q3 = to_slots(G3, charts[2], [2, 3], "q3", G)
    fiber = [rename(a, 0) for a in M.affine] + [rename(a, 0) for a in M.angles]
    return GroupoidPresentation(
        name or f"pair({M.name or 'M'})", M, G, s, t, u, i, G2=G2, m=m, pr1=pr1, pr2=pr2,
        G3=G3, q1=q1, q2=q2, q3=q3, base_block={g: rename(g, 1) for g in M.gens}, fiber=fiber)


def unit_groupoid(M: Chart, name: str | None = None) -> GroupoidPresentation:
    """Only identity arrows: G = G2 = G3 = M and every structure map is the identity."""
    Ms = _single(M, "M")
    G, G2, G3 = _single(M, "G"), _single(M, "G2"), _single(M, "G3")
    ident = identity_map(M)

    def idm(a, b, nm):
        return SpaceMap.single(a, b, ident, name=nm)

    return GroupoidPresentation(
        name or f"unit({M.name or 'M'})", M, G, idm(G, Ms, "s"), idm(G, Ms, "t"), idm(Ms, G, "u"),
        idm(G, G, "i"), G2=G2, m=idm(G2, G, "m"), pr1=idm(G2, G, "pr1"), pr2=idm(G2, G, "pr2"),
        G3=G3, q1=idm(G3, G, "q1"), q2=idm(G3, G, "q2"), q3=idm(G3, G, "q3"),
        base_block={g: g for g in M.gens}, fiber=())


def _circle_product(k: int, field, extra_affine=(), name="") -> Chart:
    return Chart(list(extra_affine), [(f"th{j}", f"c{j}", f"s{j}") for j in range(1, k + 1)],
                 field=field, name=name)


def _torus_bundle(M: Chart, name: str) -> GroupoidPresentation:
    """Bundle of circles M x S^1 -> M with fiberwise angle addition."""
    base = list(M.affine)
    if M.circles:
        raise PresentationError("torus bundle builder expects an affine base chart")
    Ms = _single(M, "M")
    Gc = Chart(base, [("th", "c", "s")], field=M.field, name="G")
    G2c = _circle_product(2, M.field, base, "G2")
    G3c = _circle_product(3, M.field, base, "G3")
    G, G2, G3 = _single(Gc, "G"), _single(G2c, "G2"), _single(G3c, "G3")
    keep = {g: None for g in base}

    def mk(src: Space, images: dict, nm: str, dst: Space = G) -> SpaceMap:
        full = {g: src.chart.gen(g) for g in keep}
        full.update({k: (src.chart.parse(v) if isinstance(v, str) else v) for k, v in images.items()})
        return _smap(src, dst, full, nm)

    s = _smap(G, Ms, {g: Gc.gen(g) for g in base}, "s")
    t = _smap(G, Ms, {g: Gc.gen(g) for g in base}, "t")
    u = _smap(Ms, G, {**{g: M.gen(g) for g in base}, "c": M.one(), "s": M.zero()}, "u")
    i = mk(G, {"c": "c", "s": "(- s)"}, "i")
    m = mk(G2, {"c": "(- (* c1 c2) (* s1 s2))", "s": "(+ (* s1 c2) (* c1 s2))"}, "m")
    pr1 = mk(G2, {"c": "c1", "s": "s1"}, "pr1")
    pr2 = mk(G2, {"c": "c2", "s": "s2"}, "pr2")
    q1 = mk(G3, {"c": "c1", "s": "s1"}, "q1")
    q2 = mk(G3, {"c": "c2", "s": "s2"}, "q2")
    q3 = mk(G3, {"c": "c3", "s": "s3"}, "q3")
    return GroupoidPresentation(name, M, G, s, t, u, i, G2=G2, m=m, pr1=pr1, pr2=pr2, G3=G3,
                                q1=q1, q2=q2, q3=q3, base_block={g: g for g in base}, fiber=["th"])


def circle_group() -> GroupoidPresentation:
    return _torus_bundle(Chart([], [], name="pt"), "circle-group")


def torus_bundle(M: Chart | None = None) -> GroupoidPresentation:
    M = M if M is not None else Chart(["x"], name="R")
    return _torus_bundle(M, f"torus-bundle-{M.name or 'M'}")


def real_line_group() -> GroupoidPresentation:
    """(R, +) over a point, coordinate g."""
    M = Chart([], name="pt")
    Ms = _single(M, "M")
    G = _single(Chart(["g"], name="G"), "G")
    G2 = _single(Chart(["g1", "g2"], name="G2"), "G2")
    G3 = _single(Chart(["g1", "g2", "g3"], name="G3"), "G3")
    return GroupoidPresentation(
        "real-line-group", M, G, _smap(G, Ms, {}, "s"), _smap(G, Ms, {}, "t"),
        _smap(Ms, G, {"g": 0}, "u"), _smap(G, G, {"g": "(- g)"}, "i"),
        G2=G2, m=_smap(G2, G, {"g": "(+ g1 g2)"}, "m"), pr1=_smap(G2, G, {"g": "g1"}, "pr1"),
        pr2=_smap(G2, G, {"g": "g2"}, "pr2"), G3=G3, q1=_smap(G3, G, {"g": "g1"}, "q1"),
        q2=_smap(G3, G, {"g": "g2"}, "q2"), q3=_smap(G3, G, {"g": "g3"}, "q3"),
        base_block={}, fiber=["g"])


def submersion_groupoid() -> GroupoidPresentation:
    """N x_M N for pi(x, y) = x: arrows (x, y, yp) from (x, yp) to (x, y)."""
    N = Chart(["x", "y"], name="R2")
    Ns = _single(N, "M")
    Gc = Chart(["x", "y", "yp"], name="G")
    G2c = Chart(["x", "y", "y1", "y2"], name="G2")
    G3c = Chart(["x", "y", "y1", "y2", "y3"], name="G3")
    G, G2, G3 = _single(Gc, "G"), _single(G2c, "G2"), _single(G3c, "G3")

    def arrow(src, a, b, nm):
        return _smap(src, G, {"x": "x", "y": a, "yp": b}, nm)

    return GroupoidPresentation(
        "submersion-R2-R", N, G, _smap(G, Ns, {"x": "x", "y": "yp"}, "s"),
        _smap(G, Ns, {"x": "x", "y": "y"}, "t"), _smap(Ns, G, {"x": "x", "y": "y", "yp": "y"}, "u"),
        arrow(G, "yp", "y", "i"), G2=G2, m=arrow(G2, "y", "y2", "m"),
        pr1=arrow(G2, "y", "y1", "pr1"), pr2=arrow(G2, "y1", "y2", "pr2"), G3=G3,
        q1=arrow(G3, "y", "y1", "q1"), q2=arrow(G3, "y1", "y2", "q2"),
        q3=arrow(G3, "y2", "y3", "q3"), base_block={"x": "x", "y": "yp"}, fiber=["y"])


def z2_reflection() -> DiscreteActionGroupoid:
    M = Chart(["x"], name="R")
    table = {("e", "e"): "e", ("e", "sigma"): "sigma", ("sigma", "e"): "sigma",
             ("sigma", "sigma"): "e"}
    action = {"e": identity_map(M), "sigma": SmoothMap(M, M, {"x": "(- x)"}, name="sigma")}
    return DiscreteActionGroupoid("z2-reflection", ["e", "sigma"], table, M, action, identity="e")


def pair_R() -> GroupoidPresentation:
    names = {0: "x", 1: "y", 2: "w", 3: "v"}
    return pair_groupoid(Chart(["z"], name="R"), rename=lambda g, k: names[k], name="pair-R")


def pair_S1() -> GroupoidPresentation:
    M = Chart([], [("th", "c", "s")], name="S1")
    return pair_groupoid(M, rename=lambda g, k: f"{g}{k}", name="pair-S1")


def unit_R() -> GroupoidPresentation:
    return unit_groupoid(Chart(["x"], name="R"), name="unit-R")


GALLERY = {
    "unit-R": unit_R,
    "pair-R": pair_R,
    "pair-S1": pair_S1,
    "submersion-R2-R": submersion_groupoid,
    "circle-group": circle_group,
    "torus-bundle-R": lambda: torus_bundle(Chart(["x"], name="R")),
    "z2-reflection": z2_reflection,
    "real-line-group": real_line_group,
}

ALIASES = {
    "unit(R)": "unit-R", "pair(R)": "pair-R", "pair(S1)": "pair-S1",
    "submersion(R2->R)": "submersion-R2-R", "submersion(R²→R)": "submersion-R2-R",
    "torus-bundle(R)": "torus-bundle-R",
}

_BUILT: dict = {}


def gallery_names() -> list[str]:
    return list(GALLERY)


def build_example(name: str):
    """Gallery groupoid by stable identifier; instances are shared."""
    key = ALIASES.get(name, name)
    if key not in GALLERY:
        raise KeyError(f"unknown gallery example {name!r}; known: {', '.join(GALLERY)}")
    if key not in _BUILT:
        _BUILT[key] = GALLERY[key]()
    return _BUILT[key]


def presentation_of(name_or_groupoid) -> GroupoidPresentation:
    G = build_example(name_or_groupoid) if isinstance(name_or_groupoid, str) else name_or_groupoid
    return G.to_presentation() if isinstance(G, DiscreteActionGroupoid) else G
