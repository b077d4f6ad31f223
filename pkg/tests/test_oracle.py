import random

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pencilcontact.curves import CurvePencil, PlaneCurve, fermat, random_curve, random_pencil
from pencilcontact.exact.multipoly import MultiPoly
from pencilcontact.oracle import counts as C
from pencilcontact.oracle.roots import ComplexPoly, IllScaled, NonConvergence, exact_roots, roots
from pencilcontact.oracle.solve import DegenerateConfiguration, check_chart, solve_pair

CFG = C.OracleConfig(seed=0)


class TestRoots:
    def test_roots_of_unity(self):
        cl = roots(ComplexPoly.from_exact([-1, 0, 0, 1]))
        assert [c.multiplicity for c in cl] == [1, 1, 1]
        assert all(abs(abs(c.representative) - 1) < 1e-9 for c in cl)

    def test_double_root_clusters(self):
        # (x - 2)^2 (x + 1) = x^3 - 3x^2 + 4
        cl = roots(ComplexPoly.from_exact([4, 0, -3, 1]), cluster_radius=1e-5)
        got = sorted((round(c.representative.real, 4), c.multiplicity) for c in cl)
        assert got == [(-1.0, 1), (2.0, 2)]

    def test_random_squarefree_degree_12(self):
        rng = random.Random(3)
        x = sympy.Symbol("x")
        while True:
            coeffs = [rng.randint(-9, 9) for _ in range(12)] + [rng.randint(1, 9)]
            if sympy.discriminant(sum(c * x**k for k, c in enumerate(coeffs)), x) != 0:
                break
        cl = roots(ComplexPoly.from_exact(coeffs))
        assert len(cl) == 12 and all(c.multiplicity == 1 for c in cl)

    def test_ill_scaled(self):
        with pytest.raises(IllScaled):
            ComplexPoly.from_exact([10**20, 1])
        with pytest.raises(IllScaled):
            ComplexPoly.from_exact([0, 0])

    @given(st.lists(st.integers(-30, 30), min_size=1, max_size=8, unique=True))
    def test_exact_roots_find_integer_roots(self, rts):
        x = sympy.Symbol("x")
        coeffs = [int(c) for c in sympy.Poly(sympy.prod([x - r for r in rts]), x).all_coeffs()[::-1]]
        found = sorted(round(float(mpmath.re(z))) for z in exact_roots(coeffs, dps=30))
        assert found == sorted(rts)

    def test_exact_roots_separate_close_roots(self):
        # roots 1 and 1 + 10^-15 are indistinguishable in double precision
        n = 10**15
        a, b = [-n, n], [-(n + 1), n]
        coeffs = [a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]]
        rts = sorted(exact_roots(coeffs, dps=40), key=lambda z: mpmath.re(z))
        assert abs(rts[1] - rts[0] - mpmath.mpf(10) ** -15) < mpmath.mpf(10) ** -30

    @given(st.lists(st.integers(-9, 9), min_size=3, max_size=9))
    def test_multiplicities_sum_to_degree(self, coeffs):
        coeffs = coeffs + [1]
        try:
            cl = roots(ComplexPoly.from_exact(coeffs), cluster_radius=1e-4, residual_tol=1e-6)
        except NonConvergence:
            return
        assert sum(c.multiplicity for c in cl) == len(coeffs) - 1


class TestSolvePair:
    def test_circle_and_line(self):
        x, y = MultiPoly.gens("x", "y")
        sols, elim = solve_pair(x * x + y * y - 25, x + 2 * y - 5)
        pts = sorted((round(float(mpmath.re(s.x)), 6), round(float(mpmath.re(s.y)), 6)) for s in sols)
        assert pts == [(-3.0, 4.0), (5.0, 0.0)]
        assert sum(s.multiplicity for s in sols) == elim.multiplicity_total() == 2

    def test_tangency_has_multiplicity_two(self):
        x, y = MultiPoly.gens("x", "y")
        sols, elim = solve_pair(y - x * x, y - 2 * x + 1)
        assert len(sols) == 1 and sols[0].multiplicity == 2

    def test_shared_x_is_degenerate(self):
        x, y = MultiPoly.gens("x", "y")
        with pytest.raises(DegenerateConfiguration):
            solve_pair(x * x + y * y - 25, y * y - 16)  # (+-3, +-4): two points over each x

    def test_common_component_is_degenerate(self):
        x, y = MultiPoly.gens("x", "y")
        with pytest.raises(DegenerateConfiguration):
            solve_pair((x - y) * (x + 1), (x - y) * (y + 2))

    def test_chart_check(self):
        X, Y, Z = MultiPoly.gens("x", "y", "z")
        with pytest.raises(DegenerateConfiguration):
            check_chart([X * Y - Z * Z])  # passes through [0:1:0]
        check_chart([X * X + Y * Y - Z * Z])


class TestCounts:
    def test_flexes(self):
        assert C.count_flexes(fermat(3), CFG) == 9
        assert C.count_flexes(random_curve(3, 5), CFG) == 9
        assert C.count_flexes(random_curve(4, 5), CFG) == 24

    def test_flexes_need_smooth(self):
        X, Y, Z = MultiPoly.gens("x", "y", "z")
        with pytest.raises(C.CurveError):
            C.count_flexes(PlaneCurve(Y * Y * Z - X**3 - X * X * Z, 3), CFG)

    def test_tangents_from_point(self):
        X, Y, Z = MultiPoly.gens("x", "y", "z")
        assert C.count_tangents_from_point(PlaneCurve(X * X + Y * Y - Z * Z, 2), (3, 1, 1), CFG) == 2
        assert C.count_tangents_from_point(random_curve(3, 1), config=CFG) == 6

    def test_pencil_counts(self):
        for d, tm, nm in ((2, 2, 3), (3, 4, 12)):
            p = random_pencil(d, 11)
            assert C.count_tangent_members(p, config=CFG) == tm
            assert C.count_nodal_members(p, config=CFG) == nm
        assert C.count_flex_points_on_line(random_pencil(3, 11), config=CFG) == 12

    def test_report_fields(self):
        rep = C.flexes_report(fermat(3), CFG)
        assert rep.count == 9 and rep.attempts >= 1 and rep.eliminant_degree >= 9

    @settings(max_examples=4)
    @given(st.integers(0, 1000))
    def test_invariant_under_coordinate_change(self, seed):
        # a different seed draws a different projectivity; the count must not move
        c = random_curve(3, 7)
        assert C.count_flexes(c, C.OracleConfig(seed=seed)) == 9

    def test_deterministic(self):
        p = random_pencil(3, 2)
        a = C.nodal_members_report(p, CFG)
        b = C.nodal_members_report(p, CFG)
        assert a == b

    def test_retries_exhausted(self):
        X, Y, Z = MultiPoly.gens("x", "y", "z")
        # every member is singular at [0:0:1], so no coordinate choice is ever generic
        p = CurvePencil(PlaneCurve(X * X, 2), PlaneCurve(Y * Y, 2))
        with pytest.raises(C.RetriesExhausted):
            C.count_nodal_members(p, C.OracleConfig(retries=2))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            C.OracleConfig(cluster_radius=0)
        with pytest.raises(ValueError):
            C.OracleConfig(retries=0)


class TestStretch:
    def test_hyperflex_cubic_pencil(self):
        assert C.count_hyperflexes_quartic_pencil(random_pencil(3, 0), CFG) == 0

    def test_hyperflex_quartic_skipped(self):
        with pytest.raises(C.StretchSkipped):
            C.count_hyperflexes_quartic_pencil(random_pencil(4, 0), CFG)

    def test_through_point_cubic(self):
        assert C.count_bitangent_lines_through_point(random_pencil(3, 0), config=CFG) == 0
