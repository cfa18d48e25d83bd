from __future__ import annotations

import pytest
import sympy

from qminkowski.algebra import NCPoly, to_text

_CRITERIA: dict = {}

q_sym, r_sym = sympy.symbols("q r")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        prev = _CRITERIA.get(n, (title, True))
        _CRITERIA[n] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}")


def to_sympy(f: NCPoly, names: str):
    """Commutative element -> sympy expression (via its canonical text)."""
    syms = {x: sympy.Symbol(x) for x in names}
    syms.update(q=q_sym, r=r_sym)
    return sympy.sympify(to_text(f).replace("^", "**"), locals=syms)
