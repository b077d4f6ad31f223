"""Numerical confirmation of the classical counts on concrete curves and pencils.

Every count follows the same recipe: move the data by a random integer
projectivity, eliminate exactly down to one variable, split the eliminant
by exact squarefree decomposition, root each factor at high precision and
lift the roots back.  Anything non-generic about the chosen coordinates,
line or point raises ``DegenerateConfiguration`` and the count is retried
with fresh random choices, up to ``OracleConfig.retries`` times.

The public ``count_*`` functions return plain integers (or a pair for
bitangents).  The matching ``*_report`` functions return a ``CountReport``
carrying the raw and weighted counts, eliminant degree and attempts used.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath

from ..curves import (
    XYZ,
    CurveError,
    CurvePencil,
    LineParam,
    PlaneCurve,
    _compose,
    _inverse,
    apply_matrix,
    hessian,
    hessian_form,
    polar,
    random_line,
    random_projectivity,
)
from ..exact import univariate as U
from ..exact.elimination import discriminant, gcd_degree, principal_subresultant_coefficients, resultant
from ..exact.multipoly import MultiPoly
from .roots import cluster, exact_roots, mp_aberth
from .solve import DegenerateConfiguration, affine, check_chart, eliminant, solve_pair, to_univariate, working_dps

log = logging.getLogger(__name__)


class RetriesExhausted(RuntimeError):
    """Every retry hit a degenerate configuration."""


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 0
    cluster_radius: float = 1e-6
    residual_tol: float = 1e-8
    retries: int = 5
    projectivity_height: int = 3

    def __post_init__(self):
        if self.cluster_radius <= 0 or self.residual_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.retries < 1:
            raise ValueError("retry budget must be at least 1")


@dataclass(frozen=True)
class CountReport:
    name: str
    count: int
    raw: int
    eliminant_degree: int
    attempts: int
    detail: Tuple[Tuple[str, int], ...] = ()

    def get(self, key: str) -> int:
        return dict(self.detail)[key]


def _with_retries(name: str, config: OracleConfig, body: Callable[[random.Random], CountReport]) -> CountReport:
    last = None
    for attempt in range(config.retries):
        rng = random.Random(f"{name}:{config.seed}:{attempt}")
        try:
            rep = body(rng)
        except DegenerateConfiguration as exc:
            last = exc
            log.info("%s attempt %d degenerate: %s", name, attempt + 1, exc)
            continue
        return CountReport(rep.name, rep.count, rep.raw, rep.eliminant_degree, attempt + 1, rep.detail)
    raise RetriesExhausted(f"{name}: {config.retries} attempts, last failure: {last}")


# -- numeric helpers -------------------------------------------------------------

def _ev(poly: MultiPoly, pt: Sequence) -> mpmath.mpc:
    return poly.evaluate(dict(zip(poly.vars, pt)))


def _gradient(poly: MultiPoly, pt):
    return [_ev(poly.diff(v), pt) for v in XYZ]


def _second(poly: MultiPoly, pt):
    return [[_ev(poly.diff(a).diff(b), pt) for b in XYZ] for a in XYZ]


def _norm(v) -> mpmath.mpf:
    return mpmath.sqrt(mpmath.fsum(abs(c) ** 2 for c in v))


def _transform(poly: MultiPoly, M) -> MultiPoly:
    return PlaneCurve(poly, poly.degree()).transform(M).poly


def _rel(value, scale) -> mpmath.mpf:
    return abs(value) / scale if scale else abs(value)


# -- smoothness ---------------------------------------------------------------

def _singular_free_certificate(poly: MultiPoly, rng: random.Random) -> bool:
    """True when a random chart proves the curve has no singular point."""
    M = random_projectivity(rng)
    F = _transform(poly, M)
    parts = [F.diff(v) for v in XYZ]
    if any(p.is_zero() for p in parts):
        return False
    # points at infinity: [x:1:0] and [1:0:0]
    inf = [p.subs({"z": 0, "y": 1}).univariate("x") for p in parts]
    g = U.primitive(inf[0])
    for h in inf[1:]:
        g = U.gcd_poly(g, U.primitive(h)) if U.primitive(h) else g
    if len(g) > 1 or not any(inf_k for inf_k in inf) or all(p.evaluate({"x": 1, "y": 0, "z": 0}) == 0 for p in parts):
        return False
    A = [affine(p) for p in parts]
    if any(a.degree("y") < 1 for a in A):
        return False
    r1 = resultant(A[0], A[1], "y")
    r2 = resultant(A[0], A[2], "y")
    if r1.is_zero() or r2.is_zero():
        return False
    return len(U.gcd_poly(to_univariate(r1, "x"), to_univariate(r2, "x"))) <= 1


def is_smooth(c: PlaneCurve, tries: int = 4, seed: int = 0) -> bool:
    """Exact smoothness test: the partials have no common projective zero.

    A trivial gcd of two resultants is a certificate.  A curve is declared
    singular only after ``tries`` independent charts all fail to certify.
    """
    for k in range(tries):
        if _singular_free_certificate(c.poly, random.Random(f"smooth:{seed}:{k}")):
            return True
    return False


def _require_smooth(c: PlaneCurve, config: OracleConfig):
    if not is_smooth(c, seed=config.seed):
        raise CurveError("curve is singular")


# -- curve ∩ auxiliary curve -------------------------------------------------------

def _intersection_count(F: MultiPoly, G: MultiPoly, config: OracleConfig) -> Tuple[int, int]:
    check_chart([F, G])
    sols, elim = solve_pair(affine(F), affine(G), residual_tol=config.residual_tol, cluster_radius=config.cluster_radius)
    total = sum(s.multiplicity for s in sols)
    if total != elim.multiplicity_total():
        raise DegenerateConfiguration(
            f"only {total} of {elim.multiplicity_total()} eliminant roots lift to intersection points"
        )
    return total, elim.degree


def flexes_report(c: PlaneCurve, config: OracleConfig = OracleConfig()) -> CountReport:
    if c.degree < 3:
        raise CurveError("flex count needs degree >= 3")
    _require_smooth(c, config)

    def body(rng):
        M = random_projectivity(rng, config.projectivity_height)
        F = c.transform(M)
        total, deg = _intersection_count(F.poly, hessian(F).poly, config)
        return CountReport("flexes", total, total, deg, 0)

    return _with_retries("flexes", config, body)


def count_flexes(c: PlaneCurve, config: OracleConfig = OracleConfig()) -> int:
    """Intersections of ``c`` with its Hessian, with multiplicity."""
    return flexes_report(c, config).count


def _random_point(rng: random.Random, height: int = 10):
    while True:
        p = tuple(rng.randint(-height, height) for _ in range(3))
        if any(p):
            return p


def tangents_from_point_report(c: PlaneCurve, point=None, config: OracleConfig = OracleConfig()) -> CountReport:
    if c.degree < 2:
        raise CurveError("tangent count needs degree >= 2")
    _require_smooth(c, config)
    if point is not None and c(point) == 0:
        raise CurveError("the point lies on the curve")

    def body(rng):
        X = point
        if X is None:
            X = _random_point(rng)
            if c(X) == 0:
                raise DegenerateConfiguration("random point fell on the curve")
        M = random_projectivity(rng, config.projectivity_height)
        F = c.transform(M)
        Xm = apply_matrix(_inverse(M), X)
        total, deg = _intersection_count(F.poly, polar(F, Xm).poly, config)
        return CountReport("tangents_from_point", total, total, deg, 0)

    return _with_retries("tangents_from_point", config, body)


def count_tangents_from_point(c: PlaneCurve, x=None, config: OracleConfig = OracleConfig()) -> int:
    """Intersections of ``c`` with the polar of ``x``: the class of the curve."""
    return tangents_from_point_report(c, x, config).count


# -- pencils along a line -------------------------------------------------------------

def _line_restrictions(p: CurvePencil, line: LineParam):
    V = ("s", "t")
    forms = line.forms("s", V)
    u = _compose(p.f.poly, forms)
    v = _compose(p.g.poly, forms)
    if u.degree("s") != p.degree or v.degree("s") != p.degree:
        raise DegenerateConfiguration("line direction lies on a generator")
    if gcd_degree(u.with_vars(("s", "t")), v, "s") > 0:
        raise DegenerateConfiguration("line passes through a base point")
    return u, v


def _pick_line(line, rng):
    return line if line is not None else random_line(rng)


def tangent_members_report(p: CurvePencil, line: Optional[LineParam] = None, config: OracleConfig = OracleConfig()) -> CountReport:
    def body(rng):
        L = _pick_line(line, rng)
        u, v = _line_restrictions(p, L)
        t = MultiPoly.gens("s", "t")[1]
        w = u + t * v
        D = discriminant(w, "s")
        elim = eliminant(to_univariate(D, "t"))
        dps = working_dps(w)
        total = 0
        with mpmath.workdps(dps):
            for factor, mult in elim.factors:
                for t0 in exact_roots(factor, dps=dps):
                    rs = mp_aberth([c.evaluate({"s": 0, "t": t0}) for c in w.coeffs("s")], dps=dps)
                    groups = cluster([complex(r) for r in rs], config.cluster_radius)
                    if max(len(g) for g in groups) < 2:
                        raise DegenerateConfiguration("discriminant root without a double point on the line")
                    total += mult
        return CountReport("tangent_members", total, total, elim.degree, 0)

    return _with_retries("tangent_members", config, body)


def count_tangent_members(p: CurvePencil, line: Optional[LineParam] = None, config: OracleConfig = OracleConfig()) -> int:
    """Members of the pencil tangent to the line: roots in t of the line discriminant."""
    return tangent_members_report(p, line, config).count


def nodal_members_report(p: CurvePencil, config: OracleConfig = OracleConfig()) -> CountReport:
    def body(rng):
        M = random_projectivity(rng, config.projectivity_height)
        q = p.transform(M)
        F, G = q.f.poly, q.g.poly
        check_chart([F, G])
        f, g = affine(F), affine(G)
        J1 = f.diff("x") * g - f * g.diff("x")
        J2 = f.diff("y") * g - f * g.diff("y")
        base = to_univariate(resultant(f, g, "y"), "x")
        sols, elim = solve_pair(J1, J2, strip=[base], residual_tol=config.residual_tol, cluster_radius=config.cluster_radius)
        if elim.removed_degree != p.degree ** 2:
            raise DegenerateConfiguration(f"base-point factor of degree {elim.removed_degree}, expected {p.degree ** 2}")
        ts = []
        total = 0
        for s in sols:
            pt = {"x": s.x, "y": s.y}
            gv = g.evaluate(pt)
            if abs(gv) < mpmath.mpf(config.residual_tol):
                raise DegenerateConfiguration("singular point on the member at infinity")
            ts.append(complex(-f.evaluate(pt) / gv))
            total += s.multiplicity
        members = cluster(ts, config.cluster_radius)
        if len(members) != len(ts):
            raise DegenerateConfiguration("a member with two singular points")
        if any(s.multiplicity != 1 for s in sols):
            raise DegenerateConfiguration("non-reduced singular member")
        return CountReport("nodal_members", total, len(members), elim.degree, 0)

    return _with_retries("nodal_members", config, body)


def count_nodal_members(p: CurvePencil, config: OracleConfig = OracleConfig()) -> int:
    """Parameters t at which f + t g acquires a singular point."""
    return nodal_members_report(p, config).count


def flex_points_on_line_report(p: CurvePencil, line: Optional[LineParam] = None, config: OracleConfig = OracleConfig()) -> CountReport:
    if p.degree < 3:
        raise CurveError("flex points need degree >= 3")
    V4 = XYZ + ("t",)
    H = hessian_form(p.generic_member("t"))

    def body(rng):
        L = _pick_line(line, rng)
        u, v = _line_restrictions(p, L)
        forms = L.forms("s", ("s", "t"))
        # Hessian coefficients in t, restricted to the line
        hs = [_compose(h.subs({"t": 0}).with_vars(XYZ), forms) for h in H.coeffs("t")]
        N = MultiPoly.zero(("s", "t"))
        for k, h in enumerate(hs):
            N = N + h * (-u) ** k * v ** (len(hs) - 1 - k)
        elim = eliminant(to_univariate(N, "s"))
        dps = working_dps(N)
        total = 0
        with mpmath.workdps(dps):
            for factor, mult in elim.factors:
                for s0 in exact_roots(factor, dps=dps):
                    pt = L.point(s0)
                    vv = v.evaluate({"s": s0, "t": 0})
                    if abs(vv) < mpmath.mpf(10) ** (-dps // 3):
                        raise DegenerateConfiguration("flex point on the member at infinity")
                    t0 = -u.evaluate({"s": s0, "t": 0}) / vv
                    if not _is_flex(p, t0, pt, config):
                        raise DegenerateConfiguration("eliminant root is not a flex of its member")
                    total += mult
        return CountReport("flex_points_on_line", total, total, elim.degree, 0)

    return _with_retries("flex_points_on_line", config, body)


def _is_flex(p: CurvePencil, t0, pt, config: OracleConfig) -> bool:
    """Contact order >= 3 of the tangent line at ``pt`` with the member ``f + t0 g``."""
    F, G = p.f.poly, p.g.poly
    grad = [a + t0 * b for a, b in zip(_gradient(F, pt), _gradient(G, pt))]
    if _norm(grad) < mpmath.mpf(config.residual_tol) * _norm(pt) ** (p.degree - 1):
        return False  # singular point, not a flex
    r = (mpmath.mpf("0.3"), mpmath.mpf("-0.7"), mpmath.mpf("1.1"))
    w = (grad[1] * r[2] - grad[2] * r[1], grad[2] * r[0] - grad[0] * r[2], grad[0] * r[1] - grad[1] * r[0])
    HF, HG = _second(F, pt), _second(G, pt)
    Hm = [[HF[i][j] + t0 * HG[i][j] for j in range(3)] for i in range(3)]
    val = mpmath.fsum(w[i] * Hm[i][j] * w[j] for i in range(3) for j in range(3))
    scale = _norm(w) ** 2 * mpmath.sqrt(mpmath.fsum(abs(Hm[i][j]) ** 2 for i in range(3) for j in range(3)))
    return _rel(val, scale) < config.residual_tol


def count_flex_points_on_line(p: CurvePencil, line: Optional[LineParam] = None, config: OracleConfig = OracleConfig()) -> int:
    """Points of the line that are flexes of the member through them."""
    return flex_points_on_line_report(p, line, config).count


# -- bitangents of a quartic ---------------------------------------------------------

def _contact_pattern(qcoeffs, radius) -> Tuple[List[int], List[mpmath.mpc]]:
    # multiple roots converge only linearly; 30 digits separate them far below ``radius``
    rs = mp_aberth(qcoeffs, dps=30, max_iter=200)
    pts = [complex(r) for r in rs]
    groups = cluster(pts, radius)
    sizes = [len(g) for g in groups]
    centers = [mpmath.fsum(rs[i] for i in g) / len(g) for g in groups]
    return sizes, centers


def _classify(sizes: Sequence[int]) -> str:
    """Contact pattern of a line from the root cluster sizes of its restriction."""
    big = sorted(k for k in sizes if k > 1)
    if big == [2, 2]:
        return "bitangent"
    if big == [3]:
        return "flex"
    return "other"


def _affine_singular_points(f: MultiPoly, config: OracleConfig):
    fx, fy = f.diff("x"), f.diff("y")
    sols, _ = solve_pair(fx, fy, residual_tol=config.residual_tol, cluster_radius=config.cluster_radius)
    out = []
    for s in sols:
        pt = {"x": s.x, "y": s.y}
        val = f.evaluate(pt)
        scale = mpmath.fsum(abs(c) * abs(s.x) ** e[0] * abs(s.y) ** e[1] for e, c in f.items())
        if _rel(val, scale) < config.residual_tol:
            out.append((s.x, s.y))
    return out


def bitangents_report(c: PlaneCurve, config: OracleConfig = OracleConfig()) -> CountReport:
    """Bitangents of a quartic with at most one node.

    Lines ``y = m x + b`` in a random chart; ``q(s) = F(s, m s + b, 1)``.  The
    common zeros of the two trailing principal subresultant coefficients of
    ``(q, q')`` are the lines where ``gcd(q, q')`` has degree >= 2: bitangents
    and flex lines.  Each solution line is classified from the root pattern of
    its restriction.  ``count`` is the weighted total (improper lines weigh 2).
    """
    if c.degree != 4:
        raise CurveError("bitangent count is implemented for quartics")

    def body(rng):
        M = random_projectivity(rng, config.projectivity_height)
        F = c.transform(M).poly
        check_chart([F])
        if F.evaluate({"x": 1, "y": 0, "z": 0}) == 0:
            raise DegenerateConfiguration("curve passes through [1:0:0]")
        f = affine(F)
        nodes = _affine_singular_points(f, config)
        if len(nodes) > 1:
            raise CurveError("more than one singular point")
        V = ("m", "b", "s")
        m, b, s = MultiPoly.gens(*V)
        q = _compose(F, [s, m * s + b, MultiPoly.const(1, V)])
        psc = principal_subresultant_coefficients(q, q.diff("s"), "s", upto=1)
        P0, P1 = (pp.with_vars(("m", "b")) for pp in psc)
        strip = [U.primitive(P0.leading_coeff("b").univariate("m")), U.primitive(P1.leading_coeff("b").univariate("m"))]
        sols, elim = solve_pair(P0, P1, x="m", y="b", strip=strip,
                                residual_tol=config.residual_tol, cluster_radius=config.cluster_radius)
        dps = working_dps(q)
        proper = improper = flex_lines = other = 0
        with mpmath.workdps(dps):
            for sol in sols:
                qc = [cc.evaluate({"m": sol.x, "b": sol.y, "s": 0}) for cc in q.coeffs("s")]
                sizes, centers = _contact_pattern(qc, config.cluster_radius)
                at_node = [
                    any(abs(cen - nx) <= config.cluster_radius * max(1, abs(nx)) and
                        abs(ny - sol.x * nx - sol.y) <= config.cluster_radius * max(1, abs(ny)) for nx, ny in nodes)
                    for cen in centers
                ]
                doubles = [i for i, k in enumerate(sizes) if k == 2]
                kind = _classify(sizes)
                if kind == "bitangent":
                    if any(at_node[i] for i in doubles):
                        improper += 1
                    else:
                        proper += 1
                elif kind == "flex":
                    flex_lines += 1
                else:
                    other += 1
        if other:
            raise DegenerateConfiguration(f"{other} solution lines with an unexpected contact pattern")
        return CountReport(
            "bitangents_quartic",
            proper + 2 * improper,
            proper + improper,
            elim.degree,
            0,
            (("proper", proper), ("improper", improper), ("flex_lines", flex_lines), ("nodes", len(nodes))),
        )

    return _with_retries("bitangents_quartic", config, body)


def count_bitangents_quartic(c: PlaneCurve, config: OracleConfig = OracleConfig()) -> Tuple[int, int]:
    """``(proper, improper)`` bitangent lines of a quartic with at most one node."""
    rep = bitangents_report(c, config)
    return rep.get("proper"), rep.get("improper")


# -- stretch tier ---------------------------------------------------------------

class StretchSkipped(RuntimeError):
    """A stretch-tier elimination would exceed its size budget."""


def _divide_out(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Remove every power of ``b`` dividing ``a``."""
    from ..exact.multipoly import divexact

    if b.is_constant():
        return a
    while True:
        try:
            a = divexact(a, b)
        except ArithmeticError:
            return a


def _matrix_with_column(rng: random.Random, X, height: int):
    """Random integer matrix whose third column is ``X`` (so the origin maps to ``X``)."""
    for _ in range(50):
        M = [[rng.randint(-height, height) for _ in range(3)] for _ in range(3)]
        for i in range(3):
            M[i][2] = X[i]
        from ..curves import det3

        if det3(M) != 0:
            return M
    raise DegenerateConfiguration("no invertible chart through the point")


def bitangent_lines_through_point_report(p: CurvePencil, point=None, config: OracleConfig = OracleConfig()) -> CountReport:
    """Lines through a point that are bitangent to some member of the pencil.

    The point is moved to the chart origin; lines ``(s, m s)`` through it give
    ``q(s) = f(s, m s, 1) + t g(s, m s, 1)`` and the two trailing principal
    subresultant coefficients of ``(q, q')`` are eliminated in ``(m, t)``.
    Solution lines are split into bitangents (two double contacts) and flex
    lines (one triple contact) by their root pattern.
    """

    def body(rng):
        X = point if point is not None else _random_point(rng)
        if p.f(X) == 0 and p.g(X) == 0:
            raise CurveError("the point is a base point")
        M = _matrix_with_column(rng, X, config.projectivity_height)
        q_ = p.transform(M)
        V = ("m", "t", "s")
        m, t, s = MultiPoly.gens(*V)
        one = MultiPoly.const(1, V)
        q = _compose(q_.f.poly, [s, m * s, one]) + t * _compose(q_.g.poly, [s, m * s, one])
        if q.degree("s") != p.degree:
            raise DegenerateConfiguration("restriction drops degree")
        psc = principal_subresultant_coefficients(q, q.diff("s"), "s", upto=1)
        P0, P1 = (pp.with_vars(("m", "t")) for pp in psc)
        # the leading coefficient of q divides both (restriction drops degree there)
        lc = q.leading_coeff("s").with_vars(("m", "t"))
        P0, P1 = _divide_out(P0, lc), _divide_out(P1, lc)
        strip = []
        for pp in (P0, P1):
            lc = pp.leading_coeff("t")
            if lc.free_vars() == ("m",):
                strip.append(U.primitive(lc.univariate("m")))
        sols, elim = solve_pair(P0, P1, x="m", y="t", strip=strip,
                                residual_tol=config.residual_tol, cluster_radius=config.cluster_radius)
        bitangent = flex_lines = other = at_infinity = 0
        with mpmath.workdps(working_dps(q)):
            for sol in sols:
                qc = [cc.evaluate({"m": sol.x, "t": sol.y, "s": 0}) for cc in q.coeffs("s")]
                if abs(qc[-1]) < config.residual_tol * max(abs(c) for c in qc):
                    # the restriction drops degree: contact at the line's point at infinity
                    at_infinity += 1
                    continue
                sizes, _ = _contact_pattern(qc, config.cluster_radius)
                kind = _classify(sizes)
                if kind == "bitangent":
                    bitangent += 1
                elif kind == "flex":
                    flex_lines += 1
                else:
                    other += 1
        if other:
            raise DegenerateConfiguration(f"{other} solution lines with an unexpected contact pattern")
        return CountReport("bitangent_lines_through_point", bitangent, bitangent, elim.degree, 0,
                           (("bitangent", bitangent), ("flex_lines", flex_lines), ("at_infinity", at_infinity)))

    return _with_retries("bitangent_lines_through_point", config, body)


def count_bitangent_lines_through_point(p: CurvePencil, x=None, config: OracleConfig = OracleConfig()) -> int:
    return bitangent_lines_through_point_report(p, x, config).count


HYPERFLEX_DEGREE_BUDGET = 300


def hyperflexes_report(p: CurvePencil, config: OracleConfig = OracleConfig(), degree_budget: int = HYPERFLEX_DEGREE_BUDGET) -> CountReport:
    """Lines meeting some member of a quartic pencil in a single point of contact 4.

    On ``y = m x + b`` write the restriction of ``f + t g`` as ``sum c_k s^k``.
    It is ``c_4 (s - r)^4`` iff, with ``r = -c_3 / (4 c_4)`` from the third
    derivative, ``8 c_2 c_4 - 3 c_3^2``, ``16 c_1 c_4^2 - c_3^3`` and
    ``256 c_0 c_4^3 - c_3^4`` vanish.  ``t`` is eliminated from the first
    against each of the others, then ``b``.  The last step is skipped with
    ``StretchSkipped`` when its degree bound exceeds ``degree_budget``.
    """
    if p.degree < 4:
        # contact order 4 exceeds the degree: only line components could carry it
        return CountReport("hyperflexes", 0, 0, 0, 1, (("reason_degree_below_4", 1),))
    if p.degree != 4:
        raise CurveError("hyperflex count is implemented for quartic pencils")

    def body(rng):
        M = random_projectivity(rng, config.projectivity_height)
        q_ = p.transform(M)
        V = ("m", "b", "t", "s")
        m, b, t, s = MultiPoly.gens(*V)
        one = MultiPoly.const(1, V)
        q = _compose(q_.f.poly, [s, m * s + b, one]) + t * _compose(q_.g.poly, [s, m * s + b, one])
        c = [cc.with_vars(("m", "b", "t")) for cc in q.coeffs("s")]
        if len(c) != 5:
            raise DegenerateConfiguration("restriction drops degree")
        E2 = 8 * c[2] * c[4] - 3 * c[3] ** 2
        E1 = 16 * c[1] * c[4] ** 2 - c[3] ** 3
        E0 = 256 * c[0] * c[4] ** 3 - c[3] ** 4
        A = resultant(E1, E2, "t").with_vars(("m", "b"))
        B = resultant(E0, E2, "t").with_vars(("m", "b"))
        bound = A.degree("m") * B.degree("b") + B.degree("m") * A.degree("b")
        if bound > degree_budget:
            raise StretchSkipped(f"final eliminant degree bound {bound} exceeds budget {degree_budget}")
        sols, elim = solve_pair(A, B, x="m", y="b", residual_tol=config.residual_tol, cluster_radius=config.cluster_radius)
        found = 0
        with mpmath.workdps(working_dps(q)):
            for sol in sols:
                e2 = [cc.evaluate({"m": sol.x, "b": sol.y, "t": 0}) for cc in E2.with_vars(("m", "b", "t")).coeffs("t")]
                for t0 in mp_aberth(e2, dps=30):
                    qc = [cc.evaluate({"m": sol.x, "b": sol.y, "t": t0, "s": 0}) for cc in q.coeffs("s")]
                    sizes, _ = _contact_pattern(qc, config.cluster_radius)
                    if sorted(sizes) == [4]:
                        found += 1
                        break
        return CountReport("hyperflexes", found, found, elim.degree, 0)

    return _with_retries("hyperflexes", config, body)


def count_hyperflexes_quartic_pencil(p: CurvePencil, config: OracleConfig = OracleConfig(), degree_budget: int = HYPERFLEX_DEGREE_BUDGET) -> int:
    return hyperflexes_report(p, config, degree_budget).count
