import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pencilcontact.curves import (
    XYZ,
    CurveError,
    CurvePencil,
    LineParam,
    PlaneCurve,
    apply_matrix,
    curve_from_text,
    curve_to_text,
    det3,
    dumps,
    fermat,
    hessian,
    loads,
    member_through,
    pencil_from_text,
    pencil_to_text,
    polar,
    random_curve,
    random_nodal_quartic,
    random_pencil,
    random_projectivity,
    restrict_to_line,
)
from pencilcontact.exact.multipoly import MultiPoly

x, y, z = MultiPoly.gens(*XYZ)
seeds = st.integers(0, 10_000)
points = st.tuples(*[st.integers(-6, 6)] * 3).filter(any)


def conic():
    return PlaneCurve(x * x + y * y - z * z, 2)


class TestTypes:
    def test_rejects_inhomogeneous(self):
        with pytest.raises(CurveError):
            PlaneCurve(x * x + z, 2)

    def test_rejects_zero(self):
        with pytest.raises(CurveError):
            PlaneCurve(MultiPoly.zero(XYZ), 2)

    def test_pencil_rejects_proportional(self):
        c = conic()
        with pytest.raises(CurveError):
            CurvePencil(c, PlaneCurve(c.poly * 3, 2))

    def test_line_rejects_equal_points(self):
        with pytest.raises(CurveError):
            LineParam((1, 2, 3), (2, 4, 6))


class TestConstructions:
    def test_hessian_examples(self):
        assert hessian(fermat(3)).poly == 216 * x * y * z
        h = hessian(PlaneCurve(x * x + y * y + z * z, 2))
        assert h.degree == 0 and h.poly.constant_value() == 8
        assert hessian(random_curve(4, 1)).degree == 6

    def test_polar_examples(self):
        assert polar(conic(), (0, 0, 1)).poly == -2 * z
        assert polar(random_curve(4, 2), (1, 2, 3)).degree == 3

    def test_polar_zero_reported(self):
        cone = PlaneCurve(x * x + y * y, 2)  # singular at [0:0:1]
        with pytest.raises(CurveError):
            polar(cone, (0, 0, 1))

    def test_restriction_examples(self):
        r = restrict_to_line(conic(), LineParam((0, 0, 1), (1, 0, 0)))
        (s,) = MultiPoly.gens("s")
        assert r == s * s - 1

    def test_restriction_through_point_has_no_constant(self):
        c = conic()
        r = restrict_to_line(c, LineParam((3, 4, 5), (1, 7, 2)))
        assert r.evaluate({"s": 0}) == 0

    def test_restriction_to_component_reported(self):
        c = PlaneCurve(x * (x + y + z), 2)
        with pytest.raises(CurveError):
            restrict_to_line(c, LineParam((0, 1, 0), (0, 0, 1)))

    def test_bitangent_restriction_is_square(self):
        # quartic (y z - x^2)^2 + eps * x y z (x - y): the line x = 0 meets it where (yz)^2 = 0
        q = PlaneCurve((y * z - x * x) ** 2 + 3 * x * y * z * (x - y), 4)
        r = restrict_to_line(q, LineParam((0, 1, 0), (0, 0, 1)))
        (s,) = MultiPoly.gens("s")
        assert r == s * s

    @given(seeds, points, st.fractions(max_denominator=5, min_value=-5, max_value=5))
    def test_restriction_matches_evaluation(self, seed, base, s0):
        c = random_curve(3, seed, 5)
        try:
            line = LineParam(base, (1, -2, 3))
            r = restrict_to_line(c, line)
        except CurveError:
            return
        assert r.evaluate({"s": s0}) == c(line.point(s0))

    def test_member_through(self):
        p = CurvePencil(PlaneCurve(x * x - y * z, 2), PlaneCurve(y * y + z * z, 2))
        assert member_through(p, (0, 0, 1)) == 0
        p2 = CurvePencil(PlaneCurve(x * x + 2 * z * z, 2), PlaneCurve(y * y + 2 * z * z, 2))
        assert member_through(p2, (1, 1, 0)) == -1
        base_pencil = CurvePencil(PlaneCurve(x * y, 2), PlaneCurve(x * z, 2))
        with pytest.raises(CurveError):
            member_through(base_pencil, (0, 1, 1))

    @given(seeds, seeds)
    def test_hessian_covariance(self, seed, mseed):
        # Hess(F o M) = det(M)^2 * Hess(F) o M
        c = random_curve(3, seed, 4)
        M = random_projectivity(random.Random(mseed), 2)
        lhs = hessian(c.transform(M)).poly
        rhs = hessian(c).transform(M).poly * (det3(M) ** 2)
        assert lhs == rhs

    @given(seeds, seeds, points)
    def test_polar_covariance(self, seed, mseed, pt):
        # polar of F o M at p equals polar of F at M p, pulled back by M
        c = random_curve(3, seed, 4)
        M = random_projectivity(random.Random(mseed), 2)
        try:
            lhs = polar(c.transform(M), pt).poly
            rhs = polar(c, apply_matrix(M, pt)).transform(M).poly
        except CurveError:
            return
        assert lhs == rhs


class TestRandom:
    @given(st.integers(2, 5), seeds, st.integers(1, 12))
    def test_deterministic_and_bounded(self, deg, seed, height):
        a, b = random_pencil(deg, seed, height), random_pencil(deg, seed, height)
        assert a == b
        for c in (a.f, a.g):
            assert all(abs(v) <= height for _, v in c.poly.items())

    def test_rejects_bad_degree(self):
        with pytest.raises(CurveError):
            random_pencil(1, 0)

    @given(seeds)
    def test_nodal_quartic_is_singular_at_node(self, seed):
        c, node = random_nodal_quartic(seed)
        assert c(node) == 0
        for part in c.partials():
            assert part.evaluate(dict(zip(XYZ, node))) == 0

    def test_generic_member(self):
        p = random_pencil(3, 0)
        t = Fraction(2, 7)
        gm = p.generic_member()
        assert gm.subs({"t": t}).with_vars(XYZ) == p.member(t).poly


class TestSerialization:
    @given(st.integers(2, 4), seeds)
    def test_json_roundtrip(self, deg, seed):
        p = random_pencil(deg, seed)
        assert loads(dumps(p)) == p
        assert loads(dumps(p.f)) == p.f

    @given(st.integers(2, 4), seeds)
    def test_text_roundtrip(self, deg, seed):
        p = random_pencil(deg, seed)
        assert curve_from_text(curve_to_text(p.f)) == p.f
        assert pencil_from_text(pencil_to_text(p), seed=p.seed) == p

    def test_rational_coefficients(self):
        c = PlaneCurve(x * x * Fraction(1, 3) - y * z, 2)
        assert curve_from_text(curve_to_text(c)) == c
        assert "1/3" in curve_to_text(c)

    def test_bad_record(self):
        with pytest.raises(CurveError):
            curve_from_text("1 1 1\n")
