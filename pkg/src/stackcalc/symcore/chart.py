"""Charts and their function rings.

A chart has affine coordinates x_1..x_n and circular coordinates
theta_1..theta_k.  Each circular coordinate contributes a generator pair
(c_i, s_i) standing for (cos theta_i, sin theta_i).  The function ring is

    K[x_1..x_n, c_1, s_1, .., c_k, s_k] / (c_i^2 + s_i^2 - 1)

and a :class:`ChartFunction` is stored in the normal form where every
s_i exponent is 0 or 1 (rewrite s^2 -> 1 - c^2).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .scalars import QQ_FIELD, ScalarField


class ChartError(ValueError):
    pass


class Chart:
    """Coordinate chart.

    ``circles`` entries are either an angle name ``"t"`` (generators
    ``c_t``, ``s_t``) or a triple ``(angle, cos_name, sin_name)``.
    """

    def __init__(self, affine: Iterable[str] = (), circles: Iterable = (),
                 field: ScalarField = QQ_FIELD, name: str = ""):
        self.affine = tuple(affine)
        circ = []
        for entry in circles:
            if isinstance(entry, str):
                circ.append((entry, f"c_{entry}", f"s_{entry}"))
            else:
                angle, c, s = entry
                circ.append((angle, c, s))
        self.circles = tuple(circ)
        self.field = field
        self.name = name

        gens = list(self.affine)
        for _, c, s in self.circles:
            gens.extend([c, s])
        self.gens = tuple(gens)
        self.angles = tuple(a for a, _, _ in self.circles)
        # derivation frame: one d/dx per affine coordinate, one d/dtheta per circle
        self.derivations = self.affine + self.angles

        names = list(self.gens) + list(self.angles) + list(field.params)
        if len(set(names)) != len(names):
            raise ChartError(f"coordinate names are not unique in chart {self.gens}")

        self.ngens = len(self.gens)
        n = len(self.affine)
        self.cos_index = tuple(n + 2 * i for i in range(len(self.circles)))
        self.sin_index = tuple(n + 2 * i + 1 for i in range(len(self.circles)))
        self._index = {g: i for i, g in enumerate(self.gens)}
        self._key = (self.affine, self.circles, field.params)
        self._zero_mono = (0,) * self.ngens
        self._reduce_cache: dict = {}
        self._deriv_cache: dict = {}

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Chart) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        parts = list(self.affine) + [f"{a}:({c},{s})" for a, c, s in self.circles]
        label = f"{self.name} " if self.name else ""
        return f"<Chart {label}[{', '.join(parts)}]>"

    # -- elements --------------------------------------------------------

    def index(self, gen: str) -> int:
        try:
            return self._index[gen]
        except KeyError:
            raise ChartError(f"unknown symbol {gen!r} for chart {self!r}") from None

    def gen(self, name: str) -> "ChartFunction":
        i = self.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.ngens))
        return ChartFunction(self, {mono: self.field.one})

    def generators(self) -> tuple["ChartFunction", ...]:
        return tuple(self.gen(g) for g in self.gens)

    def const(self, value) -> "ChartFunction":
        c = self.field(value) if not self.field.contains(value) else value
        if c == 0:
            return ChartFunction(self, {})
        return ChartFunction(self, {self._zero_mono: c})

    def zero(self) -> "ChartFunction":
        return ChartFunction(self, {})

    def one(self) -> "ChartFunction":
        return self.const(1)

    def param(self, name: str) -> "ChartFunction":
        return self.const(self.field.param(name))

    def monomial(self, exps) -> "ChartFunction":
        """Normalized function for an exponent tuple (may contain s^2...)."""
        return ChartFunction(self, self._reduce(tuple(exps)))

    def monomial_basis(self, degree: int) -> list[tuple]:
        """All normal-form monomials of total degree <= degree, in a fixed order."""
        slots = []
        for g in range(self.ngens):
            slots.append(1 if g in self.sin_index else None)
        out = []

        def rec(i, remaining, acc):
            if i == self.ngens:
                out.append(tuple(acc))
                return
            cap = remaining if slots[i] is None else min(1, remaining)
            for e in range(cap + 1):
                acc.append(e)
                rec(i + 1, remaining - e, acc)
                acc.pop()

        rec(0, degree, [])
        out.sort(key=lambda m: (sum(m), tuple(-e for e in m)))
        return out

    # -- normal form -----------------------------------------------------

    def _reduce(self, mono: tuple) -> dict:
        """Normal form of a single monomial with unit coefficient."""
        if all(mono[i] <= 1 for i in self.sin_index):
            return {mono: self.field.one}
        hit = self._reduce_cache.get(mono)
        if hit is not None:
            return hit
        terms = {tuple(mono): 1}
        for ci, si in zip(self.cos_index, self.sin_index):
            e = mono[si]
            if e <= 1:
                continue
            q, r = divmod(e, 2)
            new = {}
            for m, coeff in terms.items():
                for k in range(q + 1):
                    mm = list(m)
                    mm[si] = r
                    mm[ci] = m[ci] + 2 * k
                    mm = tuple(mm)
                    new[mm] = new.get(mm, 0) + coeff * comb(q, k) * (-1) ** k
            terms = {m: c for m, c in new.items() if c}
        one = self.field.one
        out = {m: one * c for m, c in terms.items()}
        self._reduce_cache[mono] = out
        return out

    def _derivative(self, j: int, mono: tuple) -> dict:
        """Derivative of a normal-form monomial along frame derivation j."""
        key = (j, mono)
        hit = self._deriv_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        n = len(self.affine)
        if j < n:
            e = mono[j]
            if e:
                m = list(mono)
                m[j] -= 1
                out = {tuple(m): self.field(e)}
        else:
            ci, si = self.cos_index[j - n], self.sin_index[j - n]
            a, b = mono[ci], mono[si]
            if a:
                # d(c^a) = -a c^(a-1) s
                m = list(mono)
                m[ci] -= 1
                m[si] += 1
                _accumulate(out, self._reduce(tuple(m)), self.field(-a))
            if b:
                # d(s^b) = b c s^(b-1)
                m = list(mono)
                m[ci] += 1
                m[si] -= 1
                _accumulate(out, self._reduce(tuple(m)), self.field(b))
        self._deriv_cache[key] = out
        return out

    def parse(self, text: str) -> "ChartFunction":
        from .expr import parse_function
        return parse_function(self, text)


def _accumulate(target: dict, terms: Mapping, scale) -> None:
    for m, c in terms.items():
        v = target.get(m)
        v = c * scale if v is None else v + c * scale
        if v == 0:
            target.pop(m, None)
        else:
            target[m] = v


class ChartFunction:
    """Normal-form element of a chart's function ring.  Immutable."""

    __slots__ = ("chart", "terms", "_hash")

    def __init__(self, chart: Chart, terms: Mapping):
        self.chart = chart
        self.terms = terms  # monomial tuple -> nonzero scalar; treated as frozen
        self._hash = None

    @classmethod
    def from_raw(cls, chart: Chart, raw: Mapping) -> "ChartFunction":
        """Normalize an arbitrary monomial->coefficient mapping."""
        return normalize(chart, raw)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree, with c and s each counting 1; -1 for zero."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_value(self):
        """Scalar value if the function is constant, else None."""
        if not self.terms:
            return self.chart.field.zero
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if not any(m):
                return c
        return None

    def coefficient(self, mono: tuple):
        return self.terms.get(tuple(mono), self.chart.field.zero)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "ChartFunction"):
        if self.chart != other.chart:
            raise ChartError(f"chart mismatch: {self.chart!r} vs {other.chart!r}")

    def _coerce(self, other):
        if isinstance(other, ChartFunction):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) or self.chart.field.contains(other):
            return self.chart.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _accumulate(out, other.terms, 1)
        return ChartFunction(self.chart, out)

    __radd__ = __add__

    def __neg__(self):
        return ChartFunction(self.chart, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _accumulate(out, other.terms, -1)
        return ChartFunction(self.chart, out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "ChartFunction":
        c = self.chart.field(c) if not self.chart.field.contains(c) else c
        if c == 0:
            return ChartFunction(self.chart, {})
        return ChartFunction(self.chart, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ChartFunction):
            self._check(other)
            return ChartFunction(self.chart, _multiply(self.chart, self.terms, other.terms))
        if isinstance(other, (int, Fraction)) or self.chart.field.contains(other):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not in the ring")
        result = self.chart.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- equality --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ChartFunction):
            return self.chart == other.chart and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.chart.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.chart, frozenset(self.terms.items())))
        return self._hash

    # -- printing --------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.chart.field
        pieces = []
        for mono, c in self.sorted_terms():
            factors = []
            for g, e in zip(self.chart.gens, mono):
                if e == 1:
                    factors.append(g)
                elif e > 1:
                    factors.append(f"{g}^{e}")
            cs = field.to_str(c)
            if field.params and not field.is_rational(c):
                cs = f"({cs})"
            if not factors:
                pieces.append(cs)
            elif cs == "1":
                pieces.append("*".join(factors))
            elif cs == "-1":
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(cs + "*" + "*".join(factors))
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"ChartFunction({self})"

    def to_prefix(self) -> str:
        from .expr import function_to_prefix
        return function_to_prefix(self)


def _multiply(chart: Chart, a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    sin_index = chart.sin_index
    if not a or not b:
        return out
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            c = ca * cb
            if any(m[i] > 1 for i in sin_index):
                _accumulate(out, chart._reduce(m), c)
            else:
                v = out.get(m)
                v = c if v is None else v + c
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
    return out


def normalize(chart: Chart, raw: Mapping) -> ChartFunction:
    """Normal form of a formal sum {exponent tuple: coefficient}.

    Coefficients may be ints, Fractions or field elements; exponents may
    carry any sine powers.  Idempotent on normal forms.
    """
    out: dict = {}
    field = chart.field
    for mono, c in raw.items():
        mono = tuple(mono)
        if len(mono) != chart.ngens or any(e < 0 for e in mono):
            raise ChartError(f"bad exponent vector {mono} for chart {chart!r}")
        c = c if field.contains(c) else field(c)
        if c == 0:
            continue
        _accumulate(out, chart._reduce(mono), c)
    return ChartFunction(chart, out)


def normalize_symbols(chart: Chart, raw: Mapping[tuple, object]) -> ChartFunction:
    """Normalize a formal sum keyed by tuples of symbol names.

    ``{("s", "s"): 1}`` on a circle chart gives ``1 - c^2``.  Unknown
    symbols are rejected with their name.
    """
    exps: dict = {}
    for word, c in raw.items():
        m = [0] * chart.ngens
        for sym in word:
            m[chart.index(sym)] += 1
        m = tuple(m)
        exps[m] = exps.get(m, 0) + c
    return normalize(chart, exps)
