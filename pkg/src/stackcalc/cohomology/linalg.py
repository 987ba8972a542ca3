"""Sparse exact Gaussian elimination over Q or Q(params).

Matrices are given column-wise: ``columns[j]`` is a dict row-key -> nonzero
scalar.  Row keys are arbitrary hashables; column indices are ints.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from ..symcore.scalars import QQ_FIELD, ScalarField

Column = dict


def _cost(field: ScalarField, x) -> int:
    return field.cost(x)


def transpose(columns: Sequence[Column]) -> dict[Hashable, dict[int, object]]:
    rows: dict = defaultdict(dict)
    for j, col in enumerate(columns):
        for key, v in col.items():
            if v != 0:
                rows[key][j] = v
    return rows


class Echelon:
    """Reduced row echelon form of a column-given matrix.

    ``order`` fixes the column scan order; columns scanned late become free
    variables whenever possible.  The result is deterministic.
    """

    def __init__(self, columns: Sequence[Column], field: ScalarField = QQ_FIELD,
                 order: Sequence[int] | None = None):
        self.ncols = len(columns)
        self.field = field
        order = list(range(self.ncols)) if order is None else list(order)
        if sorted(order) != list(range(self.ncols)):
            raise ValueError("column order must be a permutation")
        self.order = order
        rows = transpose(columns)
        keys = sorted(rows, key=repr)
        active = {rid: dict(rows[k]) for rid, k in enumerate(keys)}
        where: dict[int, set] = defaultdict(set)
        for rid, row in active.items():
            for c in row:
                where[c].add(rid)
        one = field.one
        pivots: list[tuple[int, dict]] = []
        for c in order:
            cands = where.get(c)
            if not cands:
                continue
            rid = min(cands, key=lambda r: (_cost(field, active[r][c]), len(active[r]), r))
            prow = active.pop(rid)
            for cc in prow:
                where[cc].discard(rid)
            inv = one / prow[c]
            prow = {k: v * inv for k, v in prow.items()}
            for r in sorted(where[c]):
                row = active[r]
                f = row[c]
                for k, v in prow.items():
                    nv = row.get(k)
                    nv = -f * v if nv is None else nv - f * v
                    if nv == 0:
                        if k in row:
                            del row[k]
                            where[k].discard(r)
                    else:
                        if k not in row:
                            where[k].add(r)
                        row[k] = nv
                if not row:
                    del active[r]
            pivots.append((c, prow))
        # back substitution
        for idx in range(len(pivots) - 1, -1, -1):
            c, prow = pivots[idx]
            for j in range(idx):
                rj = pivots[j][1]
                f = rj.get(c)
                if f is None:
                    continue
                for k, v in prow.items():
                    nv = rj.get(k)
                    nv = -f * v if nv is None else nv - f * v
                    if nv == 0:
                        rj.pop(k, None)
                    else:
                        rj[k] = nv
        self.pivots = pivots
        self.pivot_cols = [c for c, _ in pivots]
        pset = set(self.pivot_cols)
        self.free_cols = [c for c in order if c not in pset]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel(self) -> list[dict[int, object]]:
        """One basis vector per free column: x_free = 1, pivots solved."""
        one = self.field.one
        out = []
        for f in self.free_cols:
            vec = {f: one}
            for c, row in self.pivots:
                v = row.get(f)
                if v is not None:
                    vec[c] = -v
            out.append(vec)
        return out


def kernel(columns: Sequence[Column], field: ScalarField = QQ_FIELD,
           order: Sequence[int] | None = None) -> list[dict[int, object]]:
    return Echelon(columns, field, order).kernel()


def rank(columns: Sequence[Column], field: ScalarField = QQ_FIELD) -> int:
    return Echelon(columns, field).rank


def combine(columns: Sequence[Column], coeffs: dict[int, object]) -> Column:
    out: dict = {}
    for j, a in coeffs.items():
        for k, v in columns[j].items():
            nv = out.get(k)
            nv = a * v if nv is None else nv + a * v
            if nv == 0:
                out.pop(k, None)
            else:
                out[k] = nv
    return out


def solve(columns: Sequence[Column], target: Column, field: ScalarField = QQ_FIELD):
    """Some x with A x = b (free variables zero), or None if b is not in the image."""
    n = len(columns)
    ech = Echelon(list(columns) + [dict(target)], field, order=list(range(n + 1)))
    if n in ech.pivot_cols:
        return None
    x = {}
    for c, row in ech.pivots:
        v = row.get(n)
        if v is not None:
            x[c] = v
    return x


def obstruction(columns: Sequence[Column], target: Column, field: ScalarField = QQ_FIELD):
    """A functional y (dict row-key -> scalar) with y.A = 0 and y.b = 1, or None."""
    rows = transpose(list(columns) + [dict(target)])
    keys = sorted(rows, key=repr)
    n = len(columns)
    # unknowns y_k; equations: sum_k y_k A[k, j] = 0 for j < n, sum_k y_k b_k = 1
    tcols = []
    for k in keys:
        col = {j: v for j, v in rows[k].items()}
        tcols.append(col)
    x = solve(tcols, {n: field.one}, field)
    if x is None:
        return None
    return {keys[i]: v for i, v in x.items()}


def apply_functional(y: dict, col: Column):
    out = 0
    for k, v in y.items():
        w = col.get(k)
        if w is not None:
            out = out + v * w
    return out


def span_contains(columns: Sequence[Column], target: Column, field: ScalarField = QQ_FIELD) -> bool:
    return solve(columns, target, field) is not None


def quotient(N: Sequence[Column], I: Sequence[Column], field: ScalarField = QQ_FIELD):
    """Window-relative quotient (N + I) / I.

    Returns (dimension, indices of N-elements chosen as representatives):
    an N element is kept when it is not in the span of I and of the
    elements of N before it.
    """
    ech = Echelon(list(I) + list(N), field)
    k = len(I)
    reps = [c - k for c in ech.pivot_cols if c >= k]
    return len(reps), sorted(reps)
