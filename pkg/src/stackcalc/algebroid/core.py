"""Lie algebroids with a global frame over a chart."""

from __future__ import annotations

from typing import Mapping, Sequence

from ..symcore import Chart, ChartError, ChartFunction, VectorField


class AlgebroidError(ValueError):
    pass


def _as_function(M: Chart, v) -> ChartFunction:
    if isinstance(v, ChartFunction):
        if v.chart != M:
            raise ChartError("coefficient lives on a different chart")
        return v
    if isinstance(v, str):
        return M.parse(v)
    return M.const(v)


class AlgebroidPresentation:
    """Frame e_1..e_r, anchor a(e_i) and structure functions [e_i, e_j] = sum_k c_ij^k e_k.

    ``structure`` maps a frame pair (i, j) (names or indices) to the list of
    coefficients c_ij^k; missing pairs are zero and (j, i) is filled in by
    antisymmetry.  ``groupoid`` is set when the algebroid was extracted from
    a groupoid presentation, in which case the frame is the fiber frame.
    """

    def __init__(self, M: Chart, frame: Sequence[str], anchor: Mapping | Sequence,
                 structure: Mapping | None = None, name: str = "", groupoid=None):
        self.M = M
        self.frame = tuple(frame)
        self.name = name
        self.groupoid = groupoid
        r = len(self.frame)
        if isinstance(anchor, Mapping):
            anchor = [anchor[e] for e in self.frame]
        anchor = list(anchor)
        if len(anchor) != r:
            raise AlgebroidError("one anchor field per frame element is required")
        self.anchor_fields = tuple(a if isinstance(a, VectorField) else VectorField.from_mapping(M, a)
                                   for a in anchor)
        for a in self.anchor_fields:
            if a.chart != M:
                raise AlgebroidError("anchor fields must live on the base chart")
        zero = [M.zero()] * r
        table = {(i, j): list(zero) for i in range(r) for j in range(r)}
        seen = set()
        for key, coeffs in (structure or {}).items():
            i, j = (self._index(k) for k in key)
            if isinstance(coeffs, Mapping):
                coeffs = [coeffs.get(e, 0) for e in self.frame]
            coeffs = [_as_function(M, c) for c in coeffs]
            if len(coeffs) != r:
                raise AlgebroidError(f"structure functions for {key} need {r} entries")
            if (j, i) in seen:
                if any(a + b != 0 for a, b in zip(coeffs, table[(j, i)])):
                    raise AlgebroidError(f"structure functions for {key} are not antisymmetric")
            table[(i, j)] = coeffs
            table[(j, i)] = [-c for c in coeffs]
            seen.add((i, j))
        for i in range(r):
            if any(c for c in table[(i, i)]):
                raise AlgebroidError("[e_i, e_i] must vanish")
        self.structure = table

    def __repr__(self):
        return f"<AlgebroidPresentation {self.name} frame={list(self.frame)}>"

    def _index(self, k) -> int:
        if isinstance(k, int):
            return k
        try:
            return self.frame.index(k)
        except ValueError:
            raise AlgebroidError(f"unknown frame element {k!r}") from None

    @property
    def rank(self) -> int:
        return len(self.frame)

    # -- sections --------------------------------------------------------

    def section(self, coeffs=None) -> "AlgebroidSection":
        """From a list of coefficients or a {frame name: coefficient} mapping."""
        if coeffs is None:
            coeffs = [0] * self.rank
        elif isinstance(coeffs, Mapping):
            unknown = set(coeffs) - set(self.frame)
            if unknown:
                raise AlgebroidError(f"unknown frame element(s) {sorted(unknown)}")
            coeffs = [coeffs.get(e, 0) for e in self.frame]
        return AlgebroidSection(self, [_as_function(self.M, c) for c in coeffs])

    def zero_section(self) -> "AlgebroidSection":
        return self.section()

    def frame_section(self, k) -> "AlgebroidSection":
        k = self._index(k)
        return self.section([1 if j == k else 0 for j in range(self.rank)])

    def anchor(self, alpha: "AlgebroidSection") -> VectorField:
        out = VectorField.zero(self.M)
        for a, rho in zip(alpha.coeffs, self.anchor_fields):
            if a:
                out = out + rho * a
        return out

    def bracket(self, alpha: "AlgebroidSection", beta: "AlgebroidSection") -> "AlgebroidSection":
        """Section bracket from structure functions and the Leibniz rule."""
        r = self.rank
        out = [self.M.zero()] * r
        ra, rb = self.anchor(alpha), self.anchor(beta)
        for i, a in enumerate(alpha.coeffs):
            if not a:
                continue
            for j, b in enumerate(beta.coeffs):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.structure[(i, j)]):
                    if c:
                        out[k] = out[k] + ab * c
        for k in range(r):
            out[k] = out[k] + ra.apply(beta.coeffs[k]) - rb.apply(alpha.coeffs[k])
        return AlgebroidSection(self, out)

    # -- structural checks -----------------------------------------------

    def check(self) -> list[str]:
        """Anchor compatibility and Jacobi on frame elements; returns failures."""
        bad = []
        e = [self.frame_section(k) for k in range(self.rank)]
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                lhs = self.anchor(self.bracket(e[i], e[j]))
                rhs = self.anchor_fields[i].bracket(self.anchor_fields[j])
                if lhs != rhs:
                    bad.append(f"anchor([{self.frame[i]},{self.frame[j]}]) - "
                               f"[a({self.frame[i]}),a({self.frame[j]})] = {lhs - rhs}")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                for k in range(j + 1, self.rank):
                    tot = (self.bracket(self.bracket(e[i], e[j]), e[k])
                           + self.bracket(self.bracket(e[j], e[k]), e[i])
                           + self.bracket(self.bracket(e[k], e[i]), e[j]))
                    if not tot.is_zero():
                        bad.append(f"Jacobi fails on ({self.frame[i]},{self.frame[j]},"
                                   f"{self.frame[k]}): {tot}")
        return bad

    # -- cochains and derivations ----------------------------------------

    def im_function(self, values) -> "IMFunction":
        if isinstance(values, Mapping):
            values = [values.get(e, 0) for e in self.frame]
        return IMFunction(self, [_as_function(self.M, v) for v in values])

    def zero_im_function(self) -> "IMFunction":
        return self.im_function([0] * self.rank)

    def derivation(self, symbol: VectorField, values) -> "AlgebroidDerivation":
        if isinstance(values, Mapping):
            values = [values[e] for e in self.frame]
        vals = [v if isinstance(v, AlgebroidSection) else self.section(v) for v in values]
        return AlgebroidDerivation(self, symbol, vals)

    def zero_derivation(self) -> "AlgebroidDerivation":
        return AlgebroidDerivation(self, VectorField.zero(self.M),
                                   [self.zero_section()] * self.rank)

    def ad(self, alpha: "AlgebroidSection") -> "AlgebroidDerivation":
        """ad_alpha = ([alpha, -], a(alpha))."""
        vals = [self.bracket(alpha, self.frame_section(k)) for k in range(self.rank)]
        return AlgebroidDerivation(self, self.anchor(alpha), vals)

    def dA(self, f: ChartFunction) -> "IMFunction":
        """d_A f (alpha) = L_{a(alpha)} f."""
        f = _as_function(self.M, f)
        return IMFunction(self, [rho.apply(f) for rho in self.anchor_fields])


class AlgebroidSection:
    __slots__ = ("algebroid", "coeffs")

    def __init__(self, algebroid: AlgebroidPresentation, coeffs: Sequence[ChartFunction]):
        coeffs = tuple(coeffs)
        if len(coeffs) != algebroid.rank:
            raise AlgebroidError("wrong number of section coefficients")
        self.algebroid = algebroid
        self.coeffs = coeffs

    def _other(self, other) -> "AlgebroidSection":
        if not isinstance(other, AlgebroidSection) or other.algebroid is not self.algebroid:
            raise AlgebroidError("sections of different algebroids")
        return other

    def __add__(self, other):
        other = self._other(other)
        return AlgebroidSection(self.algebroid, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._other(other)
        return AlgebroidSection(self.algebroid, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return AlgebroidSection(self.algebroid, [-a for a in self.coeffs])

    def __mul__(self, f):
        """Multiply by a function on M or a scalar."""
        if isinstance(f, ChartFunction):
            return AlgebroidSection(self.algebroid, [f * a for a in self.coeffs])
        return AlgebroidSection(self.algebroid, [a.scale(f) for a in self.coeffs])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(not a for a in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, AlgebroidSection) and other.algebroid is self.algebroid
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def degree(self) -> int:
        return max((a.degree() for a in self.coeffs), default=-1)

    def __str__(self):
        parts = []
        for name, a in zip(self.algebroid.frame, self.coeffs):
            if not a:
                continue
            if a == a.chart.one():
                parts.append(f"e_{name}")
            else:
                parts.append(f"({a})*e_{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AlgebroidSection({self})"

    def to_prefix(self) -> dict[str, str]:
        return {e: a.to_prefix() for e, a in zip(self.algebroid.frame, self.coeffs) if a}


class IMFunction:
    """A C^oo(M)-linear map omega: Gamma(A) -> C^oo(M), stored by frame values."""

    __slots__ = ("algebroid", "values")

    def __init__(self, algebroid: AlgebroidPresentation, values: Sequence[ChartFunction]):
        values = tuple(values)
        if len(values) != algebroid.rank:
            raise AlgebroidError("one value per frame element is required")
        self.algebroid = algebroid
        self.values = values

    def __call__(self, alpha: AlgebroidSection) -> ChartFunction:
        out = self.algebroid.M.zero()
        for a, w in zip(alpha.coeffs, self.values):
            if a and w:
                out = out + a * w
        return out

    evaluate = __call__

    def cocycle_defects(self) -> list[tuple[str, str, ChartFunction]]:
        """Frame pairs where L_a(a) w(b) - L_a(b) w(a) - w([a, b]) is nonzero."""
        A = self.algebroid
        e = [A.frame_section(k) for k in range(A.rank)]
        bad = []
        for i in range(A.rank):
            for j in range(i + 1, A.rank):
                d = (A.anchor_fields[i].apply(self.values[j]) - A.anchor_fields[j].apply(self.values[i])
                     - self(A.bracket(e[i], e[j])))
                if d:
                    bad.append((A.frame[i], A.frame[j], d))
        return bad

    def is_cocycle(self) -> bool:
        return not self.cocycle_defects()

    def __add__(self, other):
        return IMFunction(self.algebroid, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return IMFunction(self.algebroid, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return IMFunction(self.algebroid, [-a for a in self.values])

    def __mul__(self, f):
        if isinstance(f, ChartFunction):
            return IMFunction(self.algebroid, [f * a for a in self.values])
        return IMFunction(self.algebroid, [a.scale(f) for a in self.values])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(not a for a in self.values)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, IMFunction) and other.algebroid is self.algebroid
                and self.values == other.values)

    def __hash__(self):
        return hash(self.values)

    def __str__(self):
        return "{" + ", ".join(f"{e}: {v}" for e, v in zip(self.algebroid.frame, self.values)) + "}"

    def __repr__(self):
        return f"IMFunction({self})"


class AlgebroidDerivation:
    """(D, sigma) with D(f alpha) = sigma(f) alpha + f D(alpha), stored by D(e_i)."""

    __slots__ = ("algebroid", "symbol", "values")

    def __init__(self, algebroid: AlgebroidPresentation, symbol: VectorField,
                 values: Sequence[AlgebroidSection]):
        values = tuple(values)
        if len(values) != algebroid.rank:
            raise AlgebroidError("one value per frame element is required")
        if symbol.chart != algebroid.M:
            raise AlgebroidError("symbol must live on the base chart")
        self.algebroid = algebroid
        self.symbol = symbol
        self.values = values

    def __call__(self, alpha: AlgebroidSection) -> AlgebroidSection:
        A = self.algebroid
        out = [self.symbol.apply(a) for a in alpha.coeffs]
        for a, v in zip(alpha.coeffs, self.values):
            if a:
                out = [o + a * c for o, c in zip(out, v.coeffs)]
        return AlgebroidSection(A, out)

    apply = __call__

    def commutator(self, other: "AlgebroidDerivation") -> "AlgebroidDerivation":
        A = self.algebroid
        e = [A.frame_section(k) for k in range(A.rank)]
        vals = [self(other(x)) - other(self(x)) for x in e]
        return AlgebroidDerivation(A, self.symbol.bracket(other.symbol), vals)

    def defects(self) -> list[str]:
        """Anchor compatibility and the derivation property on frame pairs."""
        A = self.algebroid
        e = [A.frame_section(k) for k in range(A.rank)]
        bad = []
        for i in range(A.rank):
            lhs = A.anchor(self.values[i])
            rhs = self.symbol.bracket(A.anchor_fields[i])
            if lhs != rhs:
                bad.append(f"a(D e_{A.frame[i]}) - [sigma, a(e_{A.frame[i]})] = {lhs - rhs}")
        for i in range(A.rank):
            for j in range(i + 1, A.rank):
                d = self(A.bracket(e[i], e[j])) - A.bracket(self.values[i], e[j]) \
                    - A.bracket(e[i], self.values[j])
                if not d.is_zero():
                    bad.append(f"D[e_{A.frame[i]}, e_{A.frame[j]}] defect {d}")
        return bad

    def is_derivation(self) -> bool:
        return not self.defects()

    def __add__(self, other):
        return AlgebroidDerivation(self.algebroid, self.symbol + other.symbol,
                                   [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return AlgebroidDerivation(self.algebroid, self.symbol - other.symbol,
                                   [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return AlgebroidDerivation(self.algebroid, -self.symbol, [-a for a in self.values])

    def __mul__(self, f):
        """f D for a function or scalar f."""
        return AlgebroidDerivation(self.algebroid, self.symbol * f, [a * f for a in self.values])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.symbol.is_zero() and all(v.is_zero() for v in self.values)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, AlgebroidDerivation) and other.algebroid is self.algebroid
                and self.symbol == other.symbol and self.values == other.values)

    def __hash__(self):
        return hash((self.symbol, self.values))

    def __str__(self):
        vals = ", ".join(f"D(e_{e}) = {v}" for e, v in zip(self.algebroid.frame, self.values))
        return f"<sigma = {self.symbol}; {vals}>"

    def __repr__(self):
        return f"AlgebroidDerivation{self}"
