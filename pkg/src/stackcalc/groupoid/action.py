"""Action groupoids of finite groups acting on a chart."""

from __future__ import annotations

from typing import Mapping, Sequence

from ..symcore import Chart, ChartFunction, Space, SpaceMap, SmoothMap, VectorField, identity_map
from ..symcore.fields import relatedness_defects
from .presentation import GroupoidPresentation, PresentationError


class DiscreteActionGroupoid:
    """Gamma acting on M from the left; the arrow (g, x) goes from x to g.x.

    ``action[g]`` is the substitution map x -> g.x (as a map M -> M).
    """

    def __init__(self, name: str, elements: Sequence[str], table: Mapping[tuple[str, str], str],
                 M: Chart, action: Mapping[str, SmoothMap], identity: str | None = None):
        self.name = name
        self.elements = tuple(str(e) for e in elements)
        self.table = {(str(a), str(b)): str(c) for (a, b), c in table.items()}
        self.M = M
        self.action = dict(action)
        self.identity = identity if identity is not None else self._find_identity()
        self._presentation = None
        problems = self.check()
        if problems:
            raise PresentationError(f"{name}: " + "; ".join(problems))

    def _find_identity(self) -> str:
        for e in self.elements:
            if all(self.table.get((e, g)) == g and self.table.get((g, e)) == g for g in self.elements):
                return e
        raise PresentationError(f"{self.name}: multiplication table has no identity")

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def inv(self, a: str) -> str:
        for b in self.elements:
            if self.table[(a, b)] == self.identity:
                return b
        raise PresentationError(f"{self.name}: {a} has no inverse")

    def check(self) -> list[str]:
        """Group axioms, action maps compose per the table, identity acts trivially."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if (a, b) not in self.table:
                    out.append(f"table misses ({a},{b})")
        if out:
            return out
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        out.append(f"table not associative at ({a},{b},{c})")
        for g in self.elements:
            m = self.action.get(g)
            if m is None or m.source != self.M or m.target != self.M:
                out.append(f"no action map on M for {g}")
        if out:
            return out
        if self.action[self.identity] != identity_map(self.M):
            out.append("identity element does not act as the identity map")
        for a in self.elements:
            for b in self.elements:
                # x -> a.(b.x) pulls back through b first, then a
                composed = self.action[a].compose(self.action[b])
                if composed != self.action[self.mul(a, b)]:
                    out.append(f"action of {a}*{b} differs from the composite")
        return out

    # -- multiplicative data in cocycle form -----------------------------

    def cocycle_defects(self, F: Mapping[str, ChartFunction]) -> list[tuple[str, ChartFunction]]:
        """F_{ab} - (b^* F_a + F_b) and F_e for every pair; nonzero entries only."""
        bad = []
        e = self.identity
        if not F[e].is_zero():
            bad.append((f"F_{e}", F[e]))
        for a in self.elements:
            for b in self.elements:
                d = F[self.mul(a, b)] - self.action[b].pullback(F[a]) - F[b]
                if not d.is_zero():
                    bad.append((f"({a},{b})", d))
        return bad

    def invariance_defects(self, X: VectorField) -> list[tuple[str, str, ChartFunction]]:
        """Elements g whose action map does not relate X to itself."""
        bad = []
        for g in self.elements:
            for gen, d in relatedness_defects(self.action[g], X, X):
                bad.append((g, gen, d))
        return bad

    # -- chart presentation ---------------------------------------------

    def to_presentation(self) -> GroupoidPresentation:
        if self._presentation is not None:
            return self._presentation
        M, els = self.M, self.elements
        idx = {g: k for k, g in enumerate(els)}
        G = Space([(g, M) for g in els], name="G")
        pairs = [(a, b) for a in els for b in els]
        triples = [(a, b, c) for a in els for b in els for c in els]
        G2 = Space([(f"{a},{b}", M) for a, b in pairs], name="G2")
        G3 = Space([(f"{a},{b},{c}", M) for a, b, c in triples], name="G3")
        Ms = Space.single(M, name="M")
        ident = identity_map(M)
        act = self.action
        s = SpaceMap(G, Ms, [(0, ident) for _ in els], name="s")
        t = SpaceMap(G, Ms, [(0, act[g]) for g in els], name="t")
        u = SpaceMap(Ms, G, [(idx[self.identity], ident)], name="u")
        i = SpaceMap(G, G, [(idx[self.inv(g)], act[g]) for g in els], name="i")
        # pair (g, h) = ((a, b.x), (b, x)) in coordinates x of h
        pr1 = SpaceMap(G2, G, [(idx[a], act[b]) for a, b in pairs], name="pr1")
        pr2 = SpaceMap(G2, G, [(idx[b], ident) for a, b in pairs], name="pr2")
        m = SpaceMap(G2, G, [(idx[self.mul(a, b)], ident) for a, b in pairs], name="m")
        q1 = SpaceMap(G3, G, [(idx[a], act[self.mul(b, c)]) for a, b, c in triples], name="q1")
        q2 = SpaceMap(G3, G, [(idx[b], act[c]) for a, b, c in triples], name="q2")
        q3 = SpaceMap(G3, G, [(idx[c], ident) for a, b, c in triples], name="q3")
        self._presentation = GroupoidPresentation(
            self.name, M, G, s, t, u, i, G2=G2, m=m, pr1=pr1, pr2=pr2, G3=G3, q1=q1, q2=q2, q3=q3,
            base_block={g: g for g in M.gens}, fiber=())
        self._presentation.action_groupoid = self
        return self._presentation

    def arrow_function(self, F: Mapping[str, ChartFunction]):
        """The function on the arrow space whose component g is F_g."""
        P = self.to_presentation()
        return P.G.function([F[g] for g in self.elements])

    def lift_field(self, X: VectorField):
        """(X on every component, X) as a candidate multiplicative field."""
        P = self.to_presentation()
        return P.G.field([X for _ in self.elements]), X
