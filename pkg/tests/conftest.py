import os
import sys

import pytest
import sympy
from hypothesis import HealthCheck, settings

from pencilcontact.exact.multipoly import MultiPoly

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def to_sympy(p: MultiPoly):
    syms = sympy.symbols(p.vars)
    if len(p.vars) == 1:
        syms = (syms,) if not isinstance(syms, tuple) else syms
    expr = 0
    for exps, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sympy.Integer(c)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, vars):
    poly = sympy.Poly(sympy.expand(expr), *sympy.symbols(vars))
    from fractions import Fraction

    terms = {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}
    return MultiPoly(vars, terms)


@pytest.fixture
def sym():
    return to_sympy


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not getattr(mod, "SUMMARY", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.SUMMARY:
        terminalreporter.write_line(line)
