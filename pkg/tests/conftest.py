import sympy
import pytest

from stackcalc.groupoid import build_example, gallery_names


def to_sympy(f):
    """Independent rendering of a ChartFunction as a sympy expression (Q scalars only)."""
    syms = [sympy.Symbol(g) for g in f.chart.gens]
    out = sympy.Integer(0)
    for mono, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for g, e in zip(syms, mono):
            term *= g ** e
        out += term
    return sympy.expand(out)


@pytest.fixture(params=gallery_names())
def gallery_example(request):
    return build_example(request.param)


# -- acceptance reporting: one PASS/FAIL line per criterion ------------------

_criteria: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when not in ("setup", "call"):
        return
    n, title = mark.args
    entry = _criteria.setdefault(n, [title, True])
    if call.excinfo is not None:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}")
