"""Finite disjoint unions of charts.

Most spaces here have a single component; discrete action groupoids use
one component per group element (or tuple of group elements).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .chart import Chart, ChartError, ChartFunction
from .fields import VectorField, relatedness_defects
from .maps import MapError, SmoothMap


class Space:
    def __init__(self, components: Iterable[tuple[str, Chart]], name: str = ""):
        comps = tuple((str(label), chart) for label, chart in components)
        if not comps:
            raise ChartError("a space needs at least one component")
        labels = [label for label, _ in comps]
        if len(set(labels)) != len(labels):
            raise ChartError(f"duplicate component labels {labels}")
        self.components = comps
        self.labels = tuple(labels)
        self.charts = tuple(c for _, c in comps)
        self.name = name

    @classmethod
    def single(cls, chart: Chart, name: str = "") -> "Space":
        return cls([("", chart)], name=name or chart.name)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        return isinstance(other, Space) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        if len(self) == 1:
            return f"<Space {self.name} {self.charts[0]!r}>"
        return f"<Space {self.name} components={list(self.labels)}>"

    @property
    def chart(self) -> Chart:
        if len(self) != 1:
            raise ChartError(f"space {self.name} has {len(self)} components")
        return self.charts[0]

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ChartError(f"no component {label!r} in space {self.name}") from None

    # -- element constructors -------------------------------------------

    def function(self, parts) -> "SpaceFunction":
        """Coerce a SpaceFunction, a ChartFunction/string (single component) or a list."""
        if isinstance(parts, SpaceFunction):
            if parts.space != self:
                raise ChartError("function lives on a different space")
            return parts
        if isinstance(parts, (ChartFunction, str, int, Fraction)):
            if len(self) != 1:
                raise ChartError("a bare function needs a single-component space")
            parts = [parts]
        out = []
        for chart, p in zip(self.charts, parts):
            if isinstance(p, str):
                p = chart.parse(p)
            elif not isinstance(p, ChartFunction):
                p = chart.const(p)
            out.append(p)
        return SpaceFunction(self, out)

    def zero(self) -> "SpaceFunction":
        return SpaceFunction(self, [c.zero() for c in self.charts])

    def one(self) -> "SpaceFunction":
        return SpaceFunction(self, [c.one() for c in self.charts])

    def const(self, value) -> "SpaceFunction":
        return SpaceFunction(self, [c.const(value) for c in self.charts])

    def field(self, parts) -> "SpaceField":
        if isinstance(parts, SpaceField):
            return parts
        if isinstance(parts, VectorField):
            parts = [parts]
        return SpaceField(self, parts)

    def zero_field(self) -> "SpaceField":
        return SpaceField(self, [VectorField.zero(c) for c in self.charts])


class SpaceFunction:
    __slots__ = ("space", "parts")

    def __init__(self, space: Space, parts: Sequence[ChartFunction]):
        parts = tuple(parts)
        if len(parts) != len(space):
            raise ChartError("wrong number of components")
        for p, c in zip(parts, space.charts):
            if p.chart != c:
                raise ChartError("component function on the wrong chart")
        self.space = space
        self.parts = parts

    def _other(self, other):
        if isinstance(other, SpaceFunction):
            if other.space != self.space:
                raise ChartError("functions live on different spaces")
            return other.parts
        if isinstance(other, ChartFunction) and len(self.space) == 1:
            return (other,)
        if isinstance(other, (int, Fraction)) or self.space.charts[0].field.contains(other):
            return tuple(c.const(other) for c in self.space.charts)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return SpaceFunction(self.space, [a + b for a, b in zip(self.parts, o)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return SpaceFunction(self.space, [a - b for a, b in zip(self.parts, o)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SpaceFunction(self.space, [-a for a in self.parts])

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return SpaceFunction(self.space, [a * b for a, b in zip(self.parts, o)])

    __rmul__ = __mul__

    def scale(self, c):
        return SpaceFunction(self.space, [a.scale(c) for a in self.parts])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __bool__(self):
        return not self.is_zero()

    def degree(self) -> int:
        return max(p.degree() for p in self.parts)

    def __eq__(self, other):
        if isinstance(other, SpaceFunction):
            return self.space == other.space and self.parts == other.parts
        if isinstance(other, (int, Fraction, ChartFunction)):
            o = self._other(other)
            return o is not None and self.parts == o
        return NotImplemented

    def __hash__(self):
        return hash((self.space, self.parts))

    @property
    def only(self) -> ChartFunction:
        if len(self.parts) != 1:
            raise ChartError("function has several components")
        return self.parts[0]

    def __str__(self):
        if len(self.parts) == 1:
            return str(self.parts[0])
        return "{" + ", ".join(f"{lab}: {p}" for lab, p in zip(self.space.labels, self.parts)) + "}"

    def __repr__(self):
        return f"SpaceFunction({self})"

    def to_prefix(self):
        if len(self.parts) == 1:
            return self.parts[0].to_prefix()
        return {lab: p.to_prefix() for lab, p in zip(self.space.labels, self.parts)}


class SpaceField:
    __slots__ = ("space", "parts")

    def __init__(self, space: Space, parts: Sequence[VectorField]):
        parts = tuple(parts)
        if len(parts) != len(space):
            raise ChartError("wrong number of components")
        for p, c in zip(parts, space.charts):
            if p.chart != c:
                raise ChartError("component field on the wrong chart")
        self.space = space
        self.parts = parts

    def apply(self, F: SpaceFunction) -> SpaceFunction:
        F = self.space.function(F)
        return SpaceFunction(self.space, [X.apply(f) for X, f in zip(self.parts, F.parts)])

    __call__ = apply

    def bracket(self, other: "SpaceField") -> "SpaceField":
        return SpaceField(self.space, [a.bracket(b) for a, b in zip(self.parts, other.parts)])

    def __add__(self, other):
        return SpaceField(self.space, [a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other):
        return SpaceField(self.space, [a - b for a, b in zip(self.parts, other.parts)])

    def __neg__(self):
        return SpaceField(self.space, [-a for a in self.parts])

    def __mul__(self, other):
        if isinstance(other, SpaceFunction):
            return SpaceField(self.space, [a * f for a, f in zip(self.parts, other.parts)])
        if isinstance(other, ChartFunction) and len(self.parts) == 1:
            return SpaceField(self.space, [self.parts[0] * other])
        return SpaceField(self.space, [a * other for a in self.parts])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def degree(self) -> int:
        return max(p.degree() for p in self.parts)

    def __eq__(self, other):
        if not isinstance(other, SpaceField):
            return NotImplemented
        return self.space == other.space and self.parts == other.parts

    def __hash__(self):
        return hash((self.space, self.parts))

    @property
    def only(self) -> VectorField:
        if len(self.parts) != 1:
            raise ChartError("field has several components")
        return self.parts[0]

    def __str__(self):
        if len(self.parts) == 1:
            return str(self.parts[0])
        return "{" + ", ".join(f"{lab}: {p}" for lab, p in zip(self.space.labels, self.parts)) + "}"

    def __repr__(self):
        return f"SpaceField({self})"


class SpaceMap:
    """Map of spaces: each source component goes into one target component."""

    def __init__(self, source: Space, target: Space, parts: Sequence[tuple[int, SmoothMap]],
                 name: str = ""):
        parts = tuple((int(k), m) for k, m in parts)
        if len(parts) != len(source):
            raise MapError(f"map {name}: expected {len(source)} component maps, got {len(parts)}")
        for (k, m), chart in zip(parts, source.charts):
            if not 0 <= k < len(target):
                raise MapError(f"map {name}: target component {k} out of range")
            if m.source != chart or m.target != target.charts[k]:
                raise MapError(f"map {name}: component map charts do not match")
        self.source = source
        self.target = target
        self.parts = parts
        self.name = name

    @classmethod
    def single(cls, source: Space, target: Space, m: SmoothMap, name: str = "") -> "SpaceMap":
        return cls(source, target, [(0, m)], name=name or m.name)

    def __eq__(self, other):
        return (isinstance(other, SpaceMap) and self.source == other.source
                and self.target == other.target and self.parts == other.parts)

    def __hash__(self):
        return hash((self.source, self.target, self.parts))

    def __repr__(self):
        return f"<SpaceMap {self.name}>"

    def pullback(self, F) -> SpaceFunction:
        F = self.target.function(F)
        return SpaceFunction(self.source, [m.pullback(F.parts[k]) for k, m in self.parts])

    def compose(self, first: "SpaceMap") -> "SpaceMap":
        """``self o first``."""
        if first.target != self.source:
            raise MapError("compose: spaces do not match")
        parts = []
        for k, m in first.parts:
            k2, m2 = self.parts[k]
            parts.append((k2, m2.compose(m)))
        return SpaceMap(first.source, self.target, parts, name=f"{self.name}o{first.name}")

    def inverse_defects(self, inverse: "SpaceMap") -> list[str]:
        bad = []
        if inverse.source != self.target or inverse.target != self.source:
            return ["<space mismatch>"]
        for idx, (k, m) in enumerate(self.parts):
            k2, m2 = inverse.parts[k]
            if k2 != idx:
                bad.append(f"component {self.source.labels[idx]} not returned by inverse")
                continue
            bad.extend(f"[{self.source.labels[idx]}] {b}" for b in m.is_inverse(m2))
        return bad

    def pushforward(self, X: SpaceField, inverse: "SpaceMap") -> SpaceField:
        bad = self.inverse_defects(inverse)
        if bad:
            raise MapError(f"inverse check failed on {bad}")
        out: list = [None] * len(self.target)
        for idx, (k, m) in enumerate(self.parts):
            out[k] = m.pushforward(X.parts[idx], inverse.parts[k][1])
        if any(o is None for o in out):
            raise MapError("pushforward: map is not surjective on components")
        return SpaceField(self.target, out)

    def relatedness_defects(self, X: SpaceField, Y: SpaceField) -> list[tuple[str, str, ChartFunction]]:
        """(component, generator, difference) where X fails to be related to Y."""
        bad = []
        for idx, (k, m) in enumerate(self.parts):
            for g, diff in relatedness_defects(m, X.parts[idx], Y.parts[k]):
                bad.append((self.source.labels[idx], g, diff))
        return bad
