from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from conftest import from_sympy, to_sympy
from pencilcontact.exact import univariate as U
from pencilcontact.exact.elimination import (
    EliminationError,
    discriminant,
    gcd_degree,
    principal_subresultant_coefficients,
    resultant,
    subresultant_prs,
    sylvester_resultant,
)
from pencilcontact.exact.multipoly import MultiPoly, divexact
from pencilcontact.exact.polyd import PolyD, from_roots, interpolate, poly_eval, render

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polyds = st.lists(rationals, max_size=5).map(PolyD)
small = st.integers(-6, 6)


def polys_in(vars, max_deg=3, max_terms=6):
    n = len(vars)
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    return st.dictionaries(exps, st.integers(-9, 9), max_size=max_terms).map(lambda t: MultiPoly(vars, t))


def univ(var="x", lo=1, hi=4, extra=()):
    """Random polynomial in ``var`` (and ``extra`` params) with positive degree in var."""
    vars = (var,) + tuple(extra)

    @st.composite
    def build(draw):
        deg = draw(st.integers(lo, hi))
        coeffs = []
        for k in range(deg + 1):
            if extra:
                c = draw(polys_in(tuple(extra), max_deg=1, max_terms=3))
            else:
                c = MultiPoly.const(draw(small), ())
            coeffs.append(c.with_vars(vars))
        lead = draw(st.integers(1, 5)) * draw(st.sampled_from([1, -1]))
        coeffs[-1] = coeffs[-1] + MultiPoly.const(lead, vars)
        p = MultiPoly.from_coeffs(coeffs, var, vars)
        assume(p.degree(var) == deg)
        return p

    return build()


# -- PolyD -----------------------------------------------------------------------------

class TestPolyD:
    def test_eval_examples(self):
        d = PolyD.d()
        assert poly_eval(6 * (d - 3) * (3 * d - 2), 4) == 60
        assert poly_eval(PolyD(), Fraction(7, 3)) == 0
        assert poly_eval(2 * d * (d - 2) * (d - 3), 5) == 60

    def test_leading_coefficient_nonzero(self):
        p = PolyD([1, 2, 0, 0])
        assert p.degree == 1 and p.leading_coefficient() == 2
        assert PolyD([0, 0]).is_zero() and PolyD().degree == -1

    def test_render(self):
        d = PolyD.d()
        assert render(3 * d * d - 4 * d + 1) == "3d^2 - 4d + 1"
        assert render(d**3 / 2 - 1) == "(1/2)d^3 - 1"
        assert render(PolyD()) == "0"

    def test_interpolate_recovers(self):
        p = from_roots([1, 2, 5], scale=3)
        assert interpolate([(k, p(k)) for k in range(4)]) == p

    def test_shift_and_compose(self):
        d = PolyD.d()
        p = d * d + 1
        assert p.shift(-2) == (d - 2) ** 2 + 1
        assert p.compose(2 * d) == 4 * d * d + 1

    def test_exact_division(self):
        d = PolyD.d()
        q, r = (d * d - 1).divmod(d - 1)
        assert q == d + 1 and r.is_zero()

    @given(polyds, polyds, polyds)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == PolyD()

    @given(polyds, polyds, rationals)
    def test_evaluation_is_homomorphism(self, a, b, v):
        assert (a * b)(v) == a(v) * b(v)
        assert (a + b)(v) == a(v) + b(v)

    @given(polyds)
    def test_matches_sympy(self, a):
        d = sympy.Symbol("d")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * d**k for k, c in enumerate(a.coeffs))
        assert sympy.Poly(expr, d).all_coeffs()[::-1] == [sympy.Rational(c.numerator, c.denominator) for c in a.coeffs] or a.is_zero()


# -- MultiPoly ---------------------------------------------------------------------------

XY = ("x", "y")


class TestMultiPoly:
    @given(polys_in(XY), polys_in(XY), polys_in(XY))
    def test_ring_axioms_against_sympy(self, a, b, c):
        assert to_sympy(a * (b + c)) == sympy.expand(to_sympy(a) * (to_sympy(b) + to_sympy(c)))
        assert (a * b) * c == a * (b * c)

    @given(polys_in(XY))
    def test_sympy_roundtrip(self, a):
        assert from_sympy(to_sympy(a), XY) == a

    def test_no_zero_coefficients_stored(self):
        x, y = MultiPoly.gens(*XY)
        p = (x + y) - x
        assert p == y and len(p.terms()) == 1

    def test_homogeneity(self):
        x, y, z = MultiPoly.gens("x", "y", "z")
        assert (x * x + y * z).is_homogeneous()
        assert not (x * x + z).is_homogeneous()

    @given(polys_in(XY), polys_in(XY))
    def test_divexact(self, a, b):
        assume(not b.is_zero())
        assert divexact(a * b, b) == a

    def test_divexact_rejects_inexact(self):
        x, y = MultiPoly.gens(*XY)
        with pytest.raises(ArithmeticError):
            divexact(x * x + 1, x)

    @given(polys_in(XY), st.integers(-5, 5), st.integers(-5, 5))
    def test_subs_matches_evaluate(self, a, u, v):
        assert a.subs({"x": u, "y": v}).constant_value() == a.evaluate({"x": u, "y": v})


# -- resultants: two independent routes ---------------------------------------------------

class TestResultant:
    def test_examples(self):
        (x,) = MultiPoly.gens("x")
        assert resultant(x * x - 1, x - 2, "x").constant_value() == 3
        x, a, b = MultiPoly.gens("x", "a", "b")
        assert resultant(x - a, x - b, "x") == a - b
        p = x**3 - 2 * a * x + b
        assert resultant(p, p, "x").is_zero()

    def test_degree_zero_rejected(self):
        x, a = MultiPoly.gens("x", "a")
        with pytest.raises(EliminationError):
            resultant(x + 1, a + 1, "x")

    @given(univ(extra=("a",)), univ(extra=("a",)))
    def test_prs_equals_sylvester(self, p, q):
        # the fraction-free PRS and the Sylvester determinant are independent implementations
        assert resultant(p, q, "x") == sylvester_resultant(p, q, "x")

    @given(univ(extra=("a",)), univ(extra=("a",)))
    def test_matches_sympy(self, p, q):
        if p.degree("x") < q.degree("x"):
            p, q = q, p  # sympy's sign convention differs when deg p < deg q, both odd
        x = sympy.Symbol("x")
        assert to_sympy(resultant(p, q, "x")) == sympy.expand(sympy.resultant(to_sympy(p), to_sympy(q), x))

    @given(univ(hi=3), univ(hi=3), univ(hi=3))
    def test_multiplicative(self, p, q, r):
        assert resultant(p * q, r, "x") == resultant(p, r, "x") * resultant(q, r, "x")


class TestSubresultants:
    def test_double_double_root(self):
        (x,) = MultiPoly.gens("x")
        p = (x - 1) ** 2 * (x - 2) ** 2
        s = principal_subresultant_coefficients(p, p.diff("x"), "x")
        assert s[0].is_zero() and s[1].is_zero() and not s[2].is_zero()
        assert gcd_degree(p, p.diff("x"), "x") == 2

    def test_coprime(self):
        (x,) = MultiPoly.gens("x")
        p, q = x**2 + 1, x - 3
        s = principal_subresultant_coefficients(p, q, "x")
        assert s[0] == resultant(p, q, "x") and not s[0].is_zero()

    def test_identical_inputs(self):
        (x,) = MultiPoly.gens("x")
        p = x**3 - x + 5
        prs = subresultant_prs(p, p, "x")
        assert prs == [p, p]  # terminates at once: the last member is the gcd
        assert gcd_degree(p, p, "x") == 3

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=3), st.lists(st.integers(-4, 4), min_size=1, max_size=3),
           st.lists(st.integers(-4, 4), min_size=1, max_size=3))
    def test_gcd_degree_matches_euclid(self, common, ra, rb):
        (x,) = MultiPoly.gens("x")
        g = MultiPoly.const(1, ("x",))
        for r in common:
            g = g * (x - r)
        a, b = g * (x - 10), g
        for r in ra:
            a = a * (x - r)
        for r in rb:
            b = b * (x - r - 20) if r % 2 else b * (x + r)
        expected = sympy.degree(sympy.gcd(to_sympy(a), to_sympy(b)), sympy.Symbol("x"))
        if a.degree("x") < b.degree("x"):
            a, b = b, a
        assert gcd_degree(a, b, "x") == expected
        psc = principal_subresultant_coefficients(a, b, "x")
        assert all(s.is_zero() for s in psc[:expected])
        if expected < len(psc):
            assert not psc[expected].is_zero()


class TestDiscriminant:
    def test_quadratic(self):
        x, b, c = MultiPoly.gens("x", "b", "c")
        assert discriminant(x * x + b * x + c, "x") == b * b - 4 * c

    def test_double_root(self):
        (x,) = MultiPoly.gens("x")
        assert discriminant((x - 7) ** 2, "x").is_zero()

    def test_pencil_restriction_degree(self):
        x, t = MultiPoly.gens("x", "t")
        f = 2 * x**3 - x**2 + 3 * x - 1
        g = x**3 + 4 * x**2 - 2 * x + 5
        assert discriminant(f + t * g, "x").degree("t") == 4

    def test_rejects_low_degree(self):
        (x,) = MultiPoly.gens("x")
        with pytest.raises(EliminationError):
            discriminant(x + 1, "x")

    @given(univ(lo=2, hi=4))
    def test_matches_sympy(self, p):
        x = sympy.Symbol("x")
        assert discriminant(p, "x").constant_value() == sympy.discriminant(to_sympy(p), x)

    @given(univ(lo=1, hi=3), st.integers(-5, 5))
    def test_forced_double_root_vanishes(self, p, r):
        (x,) = MultiPoly.gens("x")
        assert discriminant(p * (x - r) ** 2, "x").is_zero()


# -- univariate integer helpers ------------------------------------------------------------

class TestUnivariate:
    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(1, 3))
    def test_squarefree_decomposition(self, roots, k):
        x = sympy.Symbol("x")
        expr = sympy.prod([(x - r) for r in roots]) * (x - 9) ** k
        coeffs = [int(c) for c in sympy.Poly(expr, x).all_coeffs()[::-1]]
        parts = U.squarefree_decomposition(coeffs)
        rebuilt = sympy.Integer(1)
        for f, m in parts:
            fx = sum(c * x**i for i, c in enumerate(f))
            assert sympy.discriminant(fx, x) != 0 if len(f) > 2 else True
            rebuilt *= fx**m
        assert sympy.expand(rebuilt - expr) == 0 or sympy.expand(rebuilt + expr) == 0

    def test_remove_factor(self):
        x = sympy.Symbol("x")
        a = [int(c) for c in sympy.Poly((x - 1) ** 3 * (x + 2), x).all_coeffs()[::-1]]
        rest, k = U.remove_factor(a, [-1, 1])
        assert k == 3 and U.primitive(rest) in ([2, 1], [-2, -1])
