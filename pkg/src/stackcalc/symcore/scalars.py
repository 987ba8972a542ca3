"""Exact scalar fields.

Without formal parameters the field is Q and elements are plain
:class:`fractions.Fraction`.  With parameters the field is
Q(p_1, ..., p_k), backed by sympy's sparse rational function field,
whose elements are kept in lowest terms with a normalized denominator.
Algebraic independence of the parameters is what makes, e.g.,
``m*l0 + n*l1 == 0`` decidable and false unless ``m == n == 0``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.fields import FracField


class ScalarField:
    """Q or Q(params).  Use :func:`scalar_field` to obtain shared instances."""

    def __init__(self, params: tuple[str, ...] = ()):
        self.params = tuple(params)
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"duplicate parameter names in {self.params}")
        if self.params:
            self._K = FracField(self.params, QQ)
            self._gens = dict(zip(self.params, self._K.gens))
            self.zero = self._K.zero
            self.one = self._K.one
        else:
            self._K = None
            self._gens = {}
            self.zero = Fraction(0)
            self.one = Fraction(1)

    def __repr__(self):
        if not self.params:
            return "QQ"
        return "QQ(" + ",".join(self.params) + ")"

    def __reduce__(self):
        return (scalar_field, (self.params,))

    def __call__(self, value):
        """Coerce an int, Fraction, or element of this field."""
        if self._K is None:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, Fraction):
            return self._K(value.numerator) / value.denominator
        if isinstance(value, int):
            return self._K(value)
        if getattr(value, "field", None) is self._K:
            return value
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def param(self, name: str):
        try:
            return self._gens[name]
        except KeyError:
            raise KeyError(f"unknown parameter {name!r} (field {self})") from None

    def is_rational(self, x) -> bool:
        if self._K is None:
            return True
        return x.numer.is_ground and x.denom.is_ground

    def cost(self, x) -> int:
        """Rough size of an element; used for pivot selection."""
        if self._K is None:
            return x.numerator.bit_length() + x.denominator.bit_length()
        return 64 * (len(x.numer.terms()) + len(x.denom.terms()) - 2) + len(str(x))

    def contains(self, x) -> bool:
        if self._K is None:
            return isinstance(x, Fraction)
        return getattr(x, "field", None) is self._K

    # -- printing -------------------------------------------------------

    def to_str(self, x) -> str:
        """Decimal-free infix string, e.g. ``-3/2`` or ``(l0 + 1)/(l1)``."""
        if self._K is None:
            return str(x)
        return str(x)

    def to_prefix(self, x) -> str:
        """Prefix-grammar rendering (see :mod:`stackcalc.symcore.expr`)."""
        if self._K is None:
            return _fraction_prefix(x)
        num = self._poly_prefix(x.numer)
        if x.denom == 1:
            return num
        return f"(/ {num} {self._poly_prefix(x.denom)})"

    def _poly_prefix(self, p) -> str:
        terms = sorted(p.terms(), reverse=True)
        parts = []
        for monom, coeff in terms:
            factors = []
            for name, e in zip(self.params, monom):
                factors.extend([name] * e)
            c = Fraction(int(coeff.numerator), int(coeff.denominator))
            if not factors:
                parts.append(_fraction_prefix(c))
            elif c == 1:
                parts.append(factors[0] if len(factors) == 1 else "(* " + " ".join(factors) + ")")
            else:
                parts.append("(* " + " ".join([_fraction_prefix(c)] + factors) + ")")
        if not parts:
            return "0"
        if len(parts) == 1:
            return parts[0]
        return "(+ " + " ".join(parts) + ")"


def _fraction_prefix(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"(/ {c.numerator} {c.denominator})"


@lru_cache(maxsize=None)
def scalar_field(params: tuple[str, ...] = ()) -> ScalarField:
    return ScalarField(tuple(params))


QQ_FIELD = scalar_field(())
