"""Prefix expression grammar for chart functions.

    expr := INT | SYMBOL | "(" OP expr* ")"
    OP   := "+" | "*" | "-" | "/" | "^"

``-`` with one argument negates; ``/`` divides by a constant expression;
``^`` takes a non-negative integer literal exponent.  Symbols are chart
generators (affine coordinates and cosine/sine names) or parameters of
the chart's scalar field.
"""

from __future__ import annotations

import re

from .chart import Chart, ChartError, ChartFunction

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_INT = re.compile(r"[+-]?\d+$")


class ExprError(ValueError):
    pass


def tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"cannot tokenize {text[pos:]!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


def read(text: str):
    """Parse text into a nested list tree of token strings."""
    tokens = tokenize(text)
    if not tokens:
        raise ExprError("empty expression")
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(tokens):
            raise ExprError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        if tok == ")":
            raise ExprError("unexpected ')'")
        if tok != "(":
            return tok
        items = []
        while True:
            if pos >= len(tokens):
                raise ExprError("missing ')'")
            if tokens[pos] == ")":
                pos += 1
                return items
            items.append(node())

    tree = node()
    if pos != len(tokens):
        raise ExprError(f"trailing tokens: {' '.join(tokens[pos:])}")
    return tree


def evaluate(chart: Chart, tree) -> ChartFunction:
    if isinstance(tree, str):
        if _INT.match(tree):
            return chart.const(int(tree))
        if tree in chart.field.params:
            return chart.param(tree)
        try:
            return chart.gen(tree)
        except ChartError:
            raise ExprError(f"unknown symbol {tree!r} for chart {chart!r}") from None
    if not tree:
        raise ExprError("empty application ()")
    op, args = tree[0], tree[1:]
    if not isinstance(op, str):
        raise ExprError("operator must be a symbol")
    if op == "+":
        out = chart.zero()
        for a in args:
            out = out + evaluate(chart, a)
        return out
    if op == "*":
        out = chart.one()
        for a in args:
            out = out * evaluate(chart, a)
        return out
    if op == "-":
        if not args:
            raise ExprError("'-' needs at least one argument")
        first = evaluate(chart, args[0])
        if len(args) == 1:
            return -first
        for a in args[1:]:
            first = first - evaluate(chart, a)
        return first
    if op == "/":
        if len(args) != 2:
            raise ExprError("'/' takes exactly two arguments")
        num = evaluate(chart, args[0])
        den = evaluate(chart, args[1]).constant_value()
        if den is None:
            raise ExprError("'/' divisor must be a constant")
        if den == 0:
            raise ExprError("division by zero")
        return num.scale(chart.field.one / den)
    if op == "^":
        if len(args) != 2 or not isinstance(args[1], str) or not _INT.match(args[1]):
            raise ExprError("'^' takes an expression and an integer literal")
        k = int(args[1])
        if k < 0:
            raise ExprError("negative exponent")
        return evaluate(chart, args[0]) ** k
    raise ExprError(f"unknown operator {op!r}")


def parse_function(chart: Chart, text: str) -> ChartFunction:
    return evaluate(chart, read(text))


def function_to_prefix(f: ChartFunction) -> str:
    """Canonical prefix rendering; ``parse_function`` inverts it exactly."""
    chart, field = f.chart, f.chart.field
    if f.is_zero():
        return "0"
    parts = []
    for mono, c in f.sorted_terms():
        factors = []
        for g, e in zip(chart.gens, mono):
            if e == 1:
                factors.append(g)
            elif e > 1:
                factors.append(f"(^ {g} {e})")
        if not factors:
            parts.append(field.to_prefix(c))
        elif c == 1:
            parts.append(factors[0] if len(factors) == 1 else "(* " + " ".join(factors) + ")")
        else:
            parts.append("(* " + " ".join([field.to_prefix(c)] + factors) + ")")
    if len(parts) == 1:
        return parts[0]
    return "(+ " + " ".join(parts) + ")"
