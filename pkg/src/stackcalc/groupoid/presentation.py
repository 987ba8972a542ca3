"""Chart presentations of Lie groupoids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..symcore import (Chart, ChartError, ChartFunction, Space, SpaceField, SpaceFunction,
                       SpaceMap, SmoothMap, VectorField, identity_map)


class PresentationError(ValueError):
    pass


@dataclass
class AxiomResult:
    name: str
    passed: bool
    component: str = ""
    generator: str = ""
    difference: str = ""
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"axiom": self.name, "passed": self.passed}
        if not self.passed:
            d.update(component=self.component, generator=self.generator,
                     difference=self.difference, detail=self.detail)
        return d


@dataclass
class ValidationReport:
    groupoid: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"groupoid": self.groupoid, "ok": self.ok,
                "axioms": [r.to_dict() for r in self.results]}


def map_defects(f: SpaceMap, g: SpaceMap) -> list[tuple[str, str, str]]:
    """(component, generator, difference) where two maps with the same source disagree."""
    if f.source != g.source or f.target != g.target:
        return [("", "", "maps have different source or target")]
    bad = []
    for label, (k1, m1), (k2, m2) in zip(f.source.labels, f.parts, g.parts):
        if k1 != k2:
            bad.append((label, "", f"lands in component {f.target.labels[k1]} "
                                   f"instead of {f.target.labels[k2]}"))
            continue
        for gen, a, b in zip(m1.target.gens, m1.images, m2.images):
            d = a - b
            if not d.is_zero():
                bad.append((label, gen, str(d)))
    return bad


class GroupoidPresentation:
    """Structure maps of a groupoid over charts.

    ``M`` is a chart; arrows ``G``, composable pairs ``G2`` and triples
    ``G3`` are spaces (usually with a single component).  ``q1, q2, q3``
    project a triple (g, h, k) onto its three arrows.

    Source-adapted data: ``base_block`` maps each generator of M to the
    generator of the unit component of G that s projects onto, and
    ``fiber`` lists the remaining frame directions (affine coordinates or
    circle angles) of that component.  These span ker ds along the units.
    """

    def __init__(self, name: str, M: Chart, G: Space, s: SpaceMap, t: SpaceMap,
                 u: SpaceMap, i: SpaceMap, *, G2: Space | None = None,
                 m: SpaceMap | None = None, pr1: SpaceMap | None = None,
                 pr2: SpaceMap | None = None, G3: Space | None = None,
                 q1: SpaceMap | None = None, q2: SpaceMap | None = None,
                 q3: SpaceMap | None = None, base_block: Mapping[str, str] | None = None,
                 fiber: Sequence[str] | None = None, parameters: Mapping | None = None):
        self.name = name
        self.M = M
        self.Mspace = Space.single(M, name="M")
        self.G = G
        self.s, self.t, self.u, self.i = s, t, u, i
        self.G2, self.m, self.pr1, self.pr2 = G2, m, pr1, pr2
        self.G3, self.q1, self.q2, self.q3 = G3, q1, q2, q3
        self.base_block = dict(base_block) if base_block is not None else None
        self.fiber = tuple(fiber) if fiber is not None else None
        self.parameters = dict(parameters or {})
        self._pair_tables: dict | None = None
        self._cache: dict = {}

    def __repr__(self):
        return f"<GroupoidPresentation {self.name}>"

    # -- basic data ------------------------------------------------------

    @property
    def source_adapted(self) -> bool:
        return self.base_block is not None and self.fiber is not None

    @property
    def unit_index(self) -> int:
        return self.u.parts[0][0]

    @property
    def unit_chart(self) -> Chart:
        return self.G.charts[self.unit_index]

    @property
    def unit_map(self) -> SmoothMap:
        return self.u.parts[0][1]

    def require(self, *pieces: str) -> None:
        missing = [p for p in pieces if getattr(self, p) is None]
        if missing:
            raise PresentationError(f"{self.name}: missing {', '.join(missing)}")

    def require_source_adapted(self) -> None:
        if not self.source_adapted:
            raise PresentationError(f"{self.name}: presentation is not source-adapted "
                                    "(base_block/fiber data absent)")

    def is_etale(self) -> bool:
        return self.source_adapted and not self.fiber

    def id_G(self) -> SpaceMap:
        return SpaceMap(self.G, self.G, [(k, identity_map(c)) for k, c in enumerate(self.G.charts)],
                        name="id")

    def id_M(self) -> SpaceMap:
        return SpaceMap.single(self.Mspace, self.Mspace, identity_map(self.M), name="id")

    # -- functions and fields on M and G ---------------------------------

    def on_M(self, f) -> SpaceFunction:
        if isinstance(f, SpaceFunction):
            return f
        return self.Mspace.function(f)

    def s_pull(self, f) -> SpaceFunction:
        return self.s.pullback(self.on_M(f))

    def t_pull(self, f) -> SpaceFunction:
        return self.t.pullback(self.on_M(f))

    def coboundary(self, f) -> SpaceFunction:
        """t^*f - s^*f."""
        f = self.on_M(f)
        return self.t.pullback(f) - self.s.pullback(f)

    def u_pull(self, F) -> ChartFunction:
        return self.u.pullback(self.G.function(F)).only

    def arrow_function(self, F) -> SpaceFunction:
        return self.G.function(F)

    def arrow_field(self, X) -> SpaceField:
        return self.G.field(X)

    # -- composable pairs ------------------------------------------------

    def _tables(self) -> dict:
        """For each G2 component: generator -> (1 or 2, G generator)."""
        if self._pair_tables is not None:
            return self._pair_tables
        self.require("G2", "pr1", "pr2")
        tables = {}
        for j, chart2 in enumerate(self.G2.charts):
            tab: dict = {}
            for which, pr in ((1, self.pr1), (2, self.pr2)):
                k, mp = pr.parts[j]
                for gen, img in zip(mp.target.gens, mp.images):
                    for h in chart2.gens:
                        if h not in tab and img == chart2.gen(h):
                            tab[h] = (which, gen)
            missing = [h for h in chart2.gens if h not in tab]
            if missing:
                raise PresentationError(
                    f"{self.name}: G2 generator(s) {missing} are not coordinates pulled back "
                    "by pr1 or pr2")
            tables[j] = (self.pr1.parts[j][0], self.pr2.parts[j][0], tab)
        self._pair_tables = tables
        return tables

    def _g2_component(self, ka: int, kb: int) -> int:
        hits = [j for j, (a, b, _) in self._tables().items() if a == ka and b == kb]
        if len(hits) != 1:
            raise PresentationError(
                f"{self.name}: no unique G2 component over ({self.G.labels[ka]}, {self.G.labels[kb]})")
        return hits[0]

    def pair(self, a: SpaceMap, b: SpaceMap, name: str = "") -> SpaceMap:
        """The map (a, b): S -> G2 for maps a, b: S -> G with s o a = t o b."""
        if a.source != b.source or a.target != self.G or b.target != self.G:
            raise PresentationError("pair: maps must share their source and land in G")
        parts = []
        for (ka, ma), (kb, mb) in zip(a.parts, b.parts):
            j = self._g2_component(ka, kb)
            tab = self._tables()[j][2]
            chart2 = self.G2.charts[j]
            images = {}
            for h in chart2.gens:
                which, gen = tab[h]
                mp = ma if which == 1 else mb
                images[h] = mp.image(gen)
            parts.append((j, SmoothMap(ma.source, chart2, images)))
        return SpaceMap(a.source, self.G2, parts, name=name or f"({a.name},{b.name})")

    def pair_field(self, V: SpaceField, W: SpaceField) -> SpaceField:
        """The field (V, W) on G2, read off through the product-like G2 coordinates."""
        parts = []
        for j, chart2 in enumerate(self.G2.charts):
            ka, kb, tab = self._tables()[j]
            p1 = self.pr1.parts[j][1]
            p2 = self.pr2.parts[j][1]
            values = {}
            for h in chart2.gens:
                which, gen = tab[h]
                if which == 1:
                    values[h] = p1.pullback(V.parts[ka].apply(p1.target.gen(gen)))
                else:
                    values[h] = p2.pullback(W.parts[kb].apply(p2.target.gen(gen)))
            parts.append(VectorField.from_derivation(chart2, values))
        return SpaceField(self.G2, parts)

    # -- validation ------------------------------------------------------

    def validate_axioms(self) -> ValidationReport:
        """Check every structure identity in a fixed order."""
        self.require("G2", "m", "pr1", "pr2", "G3", "q1", "q2", "q3")
        rep = ValidationReport(self.name)

        def check(name, f, g):
            bad = map_defects(f, g)
            if bad:
                comp, gen, diff = bad[0]
                rep.results.append(AxiomResult(name, False, comp, gen, diff,
                                               detail=f"{len(bad)} defect(s)"))
            else:
                rep.results.append(AxiomResult(name, True))

        def guarded(name, thunk):
            try:
                thunk()
            except (PresentationError, ChartError, ValueError) as exc:
                rep.results.append(AxiomResult(name, False, detail=str(exc)))

        s, t, u, i, m = self.s, self.t, self.u, self.i, self.m
        idG, idM = self.id_G(), self.id_M()
        check("s o u = id_M", s.compose(u), idM)
        check("t o u = id_M", t.compose(u), idM)
        check("s o pr1 = t o pr2", s.compose(self.pr1), t.compose(self.pr2))
        check("s o m = s o pr2", s.compose(m), s.compose(self.pr2))
        check("t o m = t o pr1", t.compose(m), t.compose(self.pr1))
        guarded("pairing data", self._tables)
        if rep.ok:
            check("pr1 o (pr1, pr2) = pr1", self.pr1.compose(self.pair(self.pr1, self.pr2)), self.pr1)
            q12 = self.pair(self.q1, self.q2)
            q23 = self.pair(self.q2, self.q3)
            left = m.compose(self.pair(m.compose(q12), self.q3))
            right = m.compose(self.pair(self.q1, m.compose(q23)))
            check("associativity m o (m x id) = m o (id x m)", left, right)
            ut, us = u.compose(t), u.compose(s)
            check("m o (u o t, id) = id", m.compose(self.pair(ut, idG)), idG)
            check("m o (id, u o s) = id", m.compose(self.pair(idG, us)), idG)
            check("i o i = id_G", i.compose(i), idG)
            check("s o i = t", s.compose(i), t)
            check("t o i = s", t.compose(i), s)
            check("m o (id, i) = u o t", m.compose(self.pair(idG, i)), ut)
            check("m o (i, id) = u o s", m.compose(self.pair(i, idG)), us)
        if self.source_adapted:
            rep.results.append(self._check_source_adapted())
        return rep

    def _check_source_adapted(self) -> AxiomResult:
        name = "source-adapted splitting"
        chart = self.unit_chart
        if set(self.base_block) != set(self.M.gens):
            return AxiomResult(name, False, detail="base block does not cover the generators of M")
        blocked = set(self.base_block.values())
        for d in self.fiber:
            if d not in chart.derivations:
                return AxiomResult(name, False, detail=f"fiber direction {d!r} is not a frame direction")
        fiber_gens = set()
        for d in self.fiber:
            if d in chart.affine:
                fiber_gens.add(d)
            else:
                _, c, sn = chart.circles[chart.angles.index(d)]
                fiber_gens.update((c, sn))
        if blocked & fiber_gens or blocked | fiber_gens != set(chart.gens):
            return AxiomResult(name, False, detail="base block and fiber do not split the arrow coordinates")
        smap = self.s.parts[self.unit_index][1]
        for g in self.M.gens:
            img = smap.image(g)
            if img != chart.gen(self.base_block[g]):
                return AxiomResult(name, False, component=self.G.labels[self.unit_index],
                                   generator=g, difference=str(img - chart.gen(self.base_block[g])),
                                   detail="s is not the projection onto the base block")
        return AxiomResult(name, True)

    # -- fiber frame -----------------------------------------------------

    def fiber_index(self) -> list[int]:
        self.require_source_adapted()
        return [self.unit_chart.derivations.index(d) for d in self.fiber]

    def vertical_field(self, coeffs: Sequence[ChartFunction]) -> SpaceField:
        """sum_j (s^* a_j) d_phi_j on the unit component, zero elsewhere."""
        idx = self.fiber_index()
        chart = self.unit_chart
        smap = self.s.parts[self.unit_index][1]
        comps = [chart.zero()] * len(chart.derivations)
        for j, a in zip(idx, coeffs):
            comps[j] = smap.pullback(a)
        parts = [VectorField.zero(c) for c in self.G.charts]
        parts[self.unit_index] = VectorField(chart, comps)
        return SpaceField(self.G, parts)

    def restrict_to_units(self, Y: SpaceField) -> list[ChartFunction]:
        """u-pullback of the fiber-frame coefficients of Y."""
        idx = self.fiber_index()
        part = Y.parts[self.unit_index]
        return [self.unit_map.pullback(part.coeffs[j]) for j in idx]

    def right_frame(self) -> list[SpaceField]:
        """Right-invariant fields e_j^r, from the first-slot derivative of m along (u o t, id)."""
        hit = self._cache.get("right_frame")
        if hit is not None:
            return hit
        self.require_source_adapted()
        self.require("G2", "m", "pr1", "pr2")
        P = self.pair(self.u.compose(self.t), self.id_G())
        zero = self.G.zero_field()
        frame = []
        for j in range(len(self.fiber)):
            coeffs = [self.M.zero()] * len(self.fiber)
            coeffs[j] = self.M.one()
            W = self.pair_field(self.vertical_field(coeffs), zero)
            parts = []
            for gamma, chart in enumerate(self.G.charts):
                j2, pm = P.parts[gamma]
                k, mm = self.m.parts[j2]
                if k != gamma:
                    raise PresentationError(f"{self.name}: m o (u o t, id) leaves component {gamma}")
                Wc = W.parts[j2]
                values = {g: pm.pullback(Wc.apply(mm.pullback(chart.gen(g)))) for g in chart.gens}
                parts.append(VectorField.from_derivation(chart, values))
            frame.append(SpaceField(self.G, parts))
        self._cache["right_frame"] = frame
        return frame

    def right_invariant_direct(self, coeffs: Sequence[ChartFunction], F) -> SpaceFunction:
        """L_{alpha^r} F straight from the defining derivative of m (no frame)."""
        F = self.G.function(F)
        P = self.pair(self.u.compose(self.t), self.id_G())
        W = self.pair_field(self.vertical_field(coeffs), self.G.zero_field())
        return P.pullback(W.apply(self.m.pullback(F)))
