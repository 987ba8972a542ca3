"""Vector fields on a chart, written in the commuting coordinate frame.

The frame has d/dx for every affine coordinate and d/dtheta for every
circle, with d/dtheta(c) = -s and d/dtheta(s) = c.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .chart import Chart, ChartError, ChartFunction, _accumulate


def partial(f: ChartFunction, j: int) -> ChartFunction:
    """Derivative of f along the j-th frame derivation of its chart."""
    chart = f.chart
    out: dict = {}
    for mono, c in f.terms.items():
        d = chart._derivative(j, mono)
        if d:
            _accumulate(out, d, c)
    return ChartFunction(chart, out)


class VectorField:
    __slots__ = ("chart", "coeffs", "_hash")

    def __init__(self, chart: Chart, coeffs: Sequence[ChartFunction]):
        coeffs = tuple(coeffs)
        if len(coeffs) != len(chart.derivations):
            raise ChartError(f"expected {len(chart.derivations)} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.chart != chart:
                raise ChartError("coefficient lives on a different chart")
        self.chart = chart
        self.coeffs = coeffs
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart) -> "VectorField":
        return cls(chart, [chart.zero()] * len(chart.derivations))

    @classmethod
    def coordinate(cls, chart: Chart, name: str) -> "VectorField":
        """d/d(name) for an affine coordinate or a circle angle."""
        if name not in chart.derivations:
            raise ChartError(f"no frame derivation {name!r} on {chart!r}")
        j = chart.derivations.index(name)
        return cls(chart, [chart.one() if k == j else chart.zero()
                           for k in range(len(chart.derivations))])

    @classmethod
    def from_mapping(cls, chart: Chart, coeffs: Mapping) -> "VectorField":
        """Build from {frame name: coefficient}; strings are parsed."""
        unknown = [k for k in coeffs if k not in chart.derivations]
        if unknown:
            raise ChartError(f"unknown frame derivation(s) {unknown} on {chart!r}")
        out = []
        for name in chart.derivations:
            v = coeffs.get(name, 0)
            if isinstance(v, str):
                v = chart.parse(v)
            elif not isinstance(v, ChartFunction):
                v = chart.const(v)
            out.append(v)
        return cls(chart, out)

    @classmethod
    def from_derivation(cls, chart: Chart, values: Mapping[str, ChartFunction]) -> "VectorField":
        """Frame form of the derivation with the given values on generators.

        For a circle (c, s) the values must satisfy c*D(c) + s*D(s) = 0; the
        angular coefficient is then c*D(s) - s*D(c).
        """
        n = len(chart.affine)
        coeffs = [values[g] for g in chart.affine]
        for k, (angle, cn, sn) in enumerate(chart.circles):
            c, s = chart.gen(cn), chart.gen(sn)
            dc, ds = values[cn], values[sn]
            if c * dc + s * ds != 0:
                raise ChartError(f"values on ({cn},{sn}) do not define a derivation")
            coeffs.append(c * ds - s * dc)
        assert len(coeffs) == n + len(chart.circles)
        return cls(chart, coeffs)

    # -- action ----------------------------------------------------------

    def apply(self, f: ChartFunction) -> ChartFunction:
        """Lie derivative X(f)."""
        if f.chart != self.chart:
            raise ChartError(f"Lie derivative: field on {self.chart!r}, function on {f.chart!r}")
        out = self.chart.zero()
        for j, a in enumerate(self.coeffs):
            if a:
                d = partial(f, j)
                if d:
                    out = out + a * d
        return out

    __call__ = apply

    def values(self) -> dict[str, ChartFunction]:
        """The derivation's values on the ring generators."""
        return {g: self.apply(self.chart.gen(g)) for g in self.chart.gens}

    def bracket(self, other: "VectorField") -> "VectorField":
        """[X, Y] with j-th coefficient X(Y^j) - Y(X^j)."""
        self._check(other)
        return VectorField(self.chart, [self.apply(b) - other.apply(a)
                                        for a, b in zip(self.coeffs, other.coeffs)])

    # -- linear structure ------------------------------------------------

    def _check(self, other):
        if not isinstance(other, VectorField) or other.chart != self.chart:
            raise ChartError("vector fields live on different charts")

    def __add__(self, other):
        self._check(other)
        return VectorField(self.chart, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return VectorField(self.chart, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return VectorField(self.chart, [-a for a in self.coeffs])

    def __mul__(self, other):
        """Multiply by a function or a scalar."""
        if isinstance(other, ChartFunction):
            if other.chart != self.chart:
                raise ChartError("function and field live on different charts")
            return VectorField(self.chart, [other * a for a in self.coeffs])
        if isinstance(other, (int, Fraction)) or self.chart.field.contains(other):
            return VectorField(self.chart, [a.scale(other) for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def degree(self) -> int:
        return max(a.degree() for a in self.coeffs) if self.coeffs else -1

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.chart == other.chart and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.chart, self.coeffs))
        return self._hash

    def __getitem__(self, name: str) -> ChartFunction:
        return self.coeffs[self.chart.derivations.index(name)]

    def __str__(self):
        parts = []
        for name, a in zip(self.chart.derivations, self.coeffs):
            if a.is_zero():
                continue
            if a == 1:
                parts.append(f"d_{name}")
            elif len(a.terms) == 1:
                parts.append(f"{a}*d_{name}")
            else:
                parts.append(f"({a})*d_{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"VectorField({self})"

    def to_prefix(self) -> dict[str, str]:
        return {name: a.to_prefix() for name, a in zip(self.chart.derivations, self.coeffs)
                if not a.is_zero()}


def relatedness_defects(phi, X: VectorField, Y: VectorField) -> list[tuple[str, ChartFunction]]:
    """Generators g of phi.target with X(phi^* g) != phi^*(Y(g)), with the difference."""
    if X.chart != phi.source or Y.chart != phi.target:
        raise ChartError("relatedness: charts do not match the map")
    bad = []
    for g in phi.target.gens:
        diff = X.apply(phi.pullback(phi.target.gen(g))) - phi.pullback(Y.apply(phi.target.gen(g)))
        if not diff.is_zero():
            bad.append((g, diff))
    return bad
