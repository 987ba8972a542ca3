"""Substitution maps between charts."""

from __future__ import annotations

from typing import Mapping

from .chart import Chart, ChartError, ChartFunction, _accumulate


class MapError(ValueError):
    pass


class SmoothMap:
    """A map ``source -> target`` given by the pullbacks of the target generators.

    ``images`` maps every target generator name (affine coordinates, and
    both members of each cosine/sine pair) to a ChartFunction on the
    source, or to a prefix-grammar string.
    """

    def __init__(self, source: Chart, target: Chart, images: Mapping, name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        if source.field != target.field and target.field.params:
            raise MapError("source and target scalar fields differ")
        missing = [g for g in target.gens if g not in images]
        if missing:
            raise MapError(f"map {name or ''} gives no image for {missing}")
        extra = [g for g in images if g not in target.gens]
        if extra:
            raise ChartError(f"unknown symbol(s) {extra} for target chart {target!r}")
        imgs = []
        for g in target.gens:
            v = images[g]
            if isinstance(v, str):
                v = source.parse(v)
            elif not isinstance(v, ChartFunction):
                v = source.const(v)
            if v.chart != source:
                raise ChartError(f"image of {g} lives on {v.chart!r}, expected {source!r}")
            imgs.append(v)
        self.images = tuple(imgs)
        for ci, si in zip(target.cos_index, target.sin_index):
            p, q = self.images[ci], self.images[si]
            if p * p + q * q != 1:
                raise MapError(
                    f"circle images for {target.gens[ci]},{target.gens[si]} violate "
                    f"p^2 + q^2 = 1: got {p * p + q * q}")
        self._mono_cache: dict = {}
        self._power_cache: dict = {}

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        pairs = ", ".join(f"{g}->{v}" for g, v in zip(self.target.gens, self.images))
        return f"<SmoothMap{label} [{pairs}]>"

    def __eq__(self, other):
        return (isinstance(other, SmoothMap) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def image(self, gen: str) -> ChartFunction:
        return self.images[self.target.index(gen)]

    def _power(self, i: int, e: int) -> ChartFunction:
        key = (i, e)
        hit = self._power_cache.get(key)
        if hit is None:
            hit = self.images[i] if e == 1 else self._power(i, e - 1) * self.images[i]
            self._power_cache[key] = hit
        return hit

    def _pull_monomial(self, mono: tuple) -> ChartFunction:
        hit = self._mono_cache.get(mono)
        if hit is not None:
            return hit
        out = self.source.one()
        for i, e in enumerate(mono):
            if e:
                out = out * self._power(i, e)
        self._mono_cache[mono] = out
        return out

    def pullback(self, f: ChartFunction) -> ChartFunction:
        if f.chart != self.target:
            raise ChartError(f"pullback: function lives on {f.chart!r}, map target is {self.target!r}")
        out: dict = {}
        for mono, c in f.terms.items():
            _accumulate(out, self._pull_monomial(mono).terms, c)
        return ChartFunction(self.source, out)

    def compose(self, first: "SmoothMap") -> "SmoothMap":
        """``self o first``: apply ``first`` and then ``self``."""
        if first.target != self.source:
            raise ChartError("compose: charts do not match")
        return SmoothMap(first.source, self.target,
                         {g: first.pullback(v) for g, v in zip(self.target.gens, self.images)},
                         name=f"{self.name}o{first.name}" if self.name and first.name else "")

    def is_inverse(self, inverse: "SmoothMap") -> list[str]:
        """Generators on which ``inverse`` fails to invert ``self`` (both orders)."""
        bad = []
        if inverse.source != self.target or inverse.target != self.source:
            return ["<chart mismatch>"]
        there = inverse.compose(self)   # source -> source
        back = self.compose(inverse)    # target -> target
        for g, v in zip(self.source.gens, there.images):
            if v != self.source.gen(g):
                bad.append(f"{self.source.name or 'source'}:{g}")
        for g, v in zip(self.target.gens, back.images):
            if v != self.target.gen(g):
                bad.append(f"{self.target.name or 'target'}:{g}")
        return bad

    def pushforward(self, X, inverse: "SmoothMap"):
        """phi_* X for a diffeomorphism phi with the given inverse."""
        from .fields import VectorField
        bad = self.is_inverse(inverse)
        if bad:
            raise MapError(f"inverse check failed on {bad}")
        if X.chart != self.source:
            raise ChartError("pushforward: field does not live on the map source")
        values = {g: inverse.pullback(X.apply(self.pullback(self.target.gen(g))))
                  for g in self.target.gens}
        return VectorField.from_derivation(self.target, values)


def identity_map(chart: Chart, name: str = "id") -> SmoothMap:
    return SmoothMap(chart, chart, {g: chart.gen(g) for g in chart.gens}, name=name)
