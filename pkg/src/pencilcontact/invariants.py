"""Every contact invariant as an exact polynomial in the curve degree ``d``.

Each quantity is computed along its own derivation (Chern classes on the
incidence variety, classes on the blown-up surface, degeneration
recursions, Riemann-Hurwitz), and wherever two derivations exist both are
kept so they can be compared as ``PolyD`` identities.  Names follow what a
quantity counts, e.g. ``hyperflex_degree`` is the degree of the
hypersurface of curves having a line of contact order 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .chow import (
    ChowClassPsi,
    ChowClassY,
    SurfaceDivClass,
    plane_model_genus,
    psi_degree,
    s_adjunction_genus,
    s_pair,
)
from .exact.polyd import PolyD, interpolate, render

METHODS = ("chern", "severi", "recursion", "double_point", "hurwitz", "genus_defect", "closed_form", "elementary")


class InvariantError(ValueError):
    pass


def _d() -> PolyD:
    return PolyD.d()


def integer_valued(p: PolyD) -> bool:
    """Exact test that ``p(n)`` is an integer for every integer ``n``.

    A polynomial of degree ``k`` with this property on ``k + 1`` consecutive
    integers has it everywhere (it is an integer combination of binomials).
    """
    return p.is_integer_valued_at(range(max(p.degree, 0) + 1))


# -- factored forms --------------------------------------------------------------

@dataclass(frozen=True)
class Factored:
    scale: Fraction
    factors: Tuple[PolyD, ...]

    def expand(self) -> PolyD:
        out = PolyD.const(self.scale)
        for f in self.factors:
            out = out * f
        return out

    def __str__(self):
        head = "" if self.scale == 1 else ("-" if self.scale == -1 else str(self.scale))
        body = []
        for f in self.factors:
            if f == _d():
                body.append("d")
            else:
                body.append(f"({render(f)})")
        return head + "".join(body)


def _lin(a: int, b: int = 1) -> PolyD:
    """``b d + a``"""
    return PolyD([a, b])


D_ = PolyD([0, 1])

FACTORED: Dict[str, Factored] = {
    "hyperflex": Factored(Fraction(6), (_lin(-3), _lin(-2, 3))),
    "flex_bitangent": Factored(Fraction(3), (PolyD([-4, 6, 1]), _lin(-3), _lin(-4))),
    "tritangent": Factored(Fraction(1), (PolyD([-2, 3, 1]), _lin(-3), _lin(-4), _lin(-5))),
    "bitangent_line_degree": Factored(Fraction(2), (D_, _lin(-2), _lin(-3))),
    "bitangent_point_degree": Factored(Fraction(1), (_lin(-3), PolyD([-6, 5, 2]))),
    "flex_line_curve_degree": Factored(Fraction(3), (D_, _lin(-2))),
    "flex_point_curve_degree": Factored(Fraction(6), (_lin(-1),)),
    "e_b": Factored(Fraction(1), (_lin(-3), _lin(4))),
    "e_n": Factored(Fraction(1), (_lin(-3), _lin(2))),
    "plucker_bitangents": Factored(Fraction(1, 2), (D_, _lin(-2), _lin(-3), _lin(3))),
    "salmon_claimed": Factored(Fraction(3), (_lin(-4), PolyD([18, -32, 5, 3]))),
    "nodal_fiber_count": Factored(Fraction(3), (_lin(-1), _lin(-1))),
    "tangency_cover_degree": Factored(Fraction(2), (_lin(-1),)),
    "dual_degree": Factored(Fraction(1), (D_, _lin(-1))),
}


# -- introduction: incidence dimension -----------------------------------------------

def space_of_curves_dim(d: int) -> int:
    """``N_d = d(d+3)/2``, the dimension of the space of degree-d curves."""
    return d * (d + 3) // 2


def incidence_dimension(m: Sequence[int], d: int) -> int:
    """Dimension of the variety of (line, contact points, curve) with contact orders ``m``."""
    m = list(m)
    if not m or any(int(x) != x or x < 2 for x in m):
        raise InvariantError("contact orders must be integers >= 2")
    if d + 1 < sum(m):
        raise InvariantError(f"need d + 1 >= sum of contact orders ({d + 1} < {sum(m)}); the fiber description fails")
    return space_of_curves_dim(d) + 2 - sum(x - 1 for x in m)


# -- Chern classes on the incidence variety -------------------------------------------

def principal_parts_monomials(level: int) -> Dict[Tuple[int, int], PolyD]:
    """Unreduced product of ``1 + (d - 2k) z + k s1`` over ``k = 0..level``, up to degree 3.

    Keys are exponent pairs ``(a, b)`` of ``s1^a z^b``.
    """
    if level < 0:
        raise InvariantError("level must be >= 0")
    d = _d()
    prod: Dict[Tuple[int, int], PolyD] = {(0, 0): PolyD.const(1)}
    for k in range(level + 1):
        factor = {(0, 0): PolyD.const(1), (0, 1): d - 2 * k, (1, 0): PolyD.const(k)}
        out: Dict[Tuple[int, int], PolyD] = {}
        for (a, b), c in prod.items():
            for (i, j), e in factor.items():
                if e.is_zero() or a + b + i + j > 3:
                    continue
                key = (a + i, b + j)
                out[key] = out.get(key, PolyD()) + c * e
        prod = {k_: v for k_, v in out.items() if not v.is_zero()}
    return prod


def principal_parts_chern(level: int) -> ChowClassPsi:
    """Total Chern class of the bundle of principal parts of the given level, reduced."""
    return ChowClassPsi.from_monomials(principal_parts_monomials(level))


def hyperflex_degree() -> PolyD:
    """Degree of the hypersurface of curves with a line of contact order 4 (top Chern class)."""
    return psi_degree(principal_parts_chern(3).graded_part(3))


def flex_degrees() -> Tuple[PolyD, PolyD]:
    """Degrees of the curves of flex points and of flex lines swept by a general pencil."""
    c2 = principal_parts_chern(2).graded_part(2)
    return psi_degree(c2 * ChowClassPsi.zeta()), psi_degree(c2 * ChowClassPsi.sigma1())


def flex_curve_genus() -> PolyD:
    """Genus of the flex curve of a pencil; an externally known value used as input."""
    d = _d()
    return 12 * d * d - 39 * d + 25


# -- the tangency surface -------------------------------------------------------------

def euler_surface() -> PolyD:
    """Topological Euler number of the blown-up plane (blown up at base points and nodes)."""
    d = _d()
    return 3 + d * d + 3 * (d - 1) ** 2


def nodal_fiber_count() -> PolyD:
    """Number of singular members of a general pencil."""
    d = _d()
    return 3 * (d - 1) ** 2


def tangency_cover_degree() -> PolyD:
    """Degree of the map from the tangency surface to the dual plane (members tangent to a line)."""
    return 2 * _d() - 2


def branch_curve_genus() -> PolyD:
    """Genus of the branch curve: the flex curve minus the d^2 lines dual to base points."""
    return flex_curve_genus() - _d() ** 2


def severi_cusp_count() -> PolyD:
    """Cusps of the branch curve from Severi's formula ``e(S) - n e(P2*) = 2 g - 2 - kappa``."""
    n = tangency_cover_degree()
    return 2 * branch_curve_genus() - 2 - euler_surface() + n * 3


def tangent_bundle_Y_total() -> ChowClassY:
    M, q = ChowClassY.M(), ChowClassY.q()
    return (1 + 3 * M + 3 * M * M) * (1 + 2 * q)


def tangent_bundle_Y_c1() -> ChowClassY:
    """First Chern class ``3M + 2q`` of the product of the dual plane and the pencil line."""
    total = tangent_bundle_Y_total()
    return ChowClassY.from_monomials({k: c for k, c in total.monomials().items() if sum(k) == 1})


def pullback_M() -> SurfaceDivClass:
    """Pullback of the line class of the dual plane: ``(2d-1)H - E_b - E_n``."""
    return SurfaceDivClass(2 * _d() - 1, 1, 1)


def pullback_q() -> SurfaceDivClass:
    """Pullback of the point class of the pencil line: ``dH - E_b``."""
    return SurfaceDivClass(_d(), 1, 0)


def pushforward_S() -> ChowClassY:
    """Class of the image surface, read off from its pairings with ``M^2`` and ``M q``.

    ``(a M + b q) M q = a`` and ``(a M + b q) M^2 = b``, and by the projection
    formula those equal ``f*M . f*q`` and ``f*M . f*M`` on the surface.
    """
    a = s_pair(pullback_M(), pullback_q())
    b = s_pair(pullback_M(), pullback_M())
    return a * ChowClassY.M() + b * ChowClassY.q()


def _pullback(c: ChowClassY) -> SurfaceDivClass:
    """Pullback of a divisor class ``a M + b q`` (constant part must vanish)."""
    co = c.coefficients
    if not co[0].is_zero() or any(not x.is_zero() for x in co[3:]):
        raise InvariantError("only divisor classes pull back to the surface here")
    return co[1] * pullback_M() + co[2] * pullback_q()


def tangent_class_S() -> SurfaceDivClass:
    """``c_1`` of the tangent bundle of the surface: ``3H - E_b - E_n`` (minus the canonical class)."""
    return SurfaceDivClass(3, 1, 1)


def double_point_terms() -> Dict[str, SurfaceDivClass]:
    return {
        "f*f_*[S]": _pullback(pushforward_S()),
        "f*c1(T_Y)": _pullback(tangent_bundle_Y_c1()),
        "c1(T_S)": tangent_class_S(),
    }


def double_point_class() -> SurfaceDivClass:
    """Double point formula ``f*f_*[S] - f*c1(T_Y) + c1(T_S)``."""
    t = double_point_terms()
    return t["f*f_*[S]"] - t["f*c1(T_Y)"] + t["c1(T_S)"]


def flex_class_S() -> SurfaceDivClass:
    """Class of the flex curve on the surface: ``(6d-6)H - 3E_b - 2E_n``."""
    return SurfaceDivClass(6 * _d() - 6, 3, 2)


def bitangent_class_S() -> SurfaceDivClass:
    """The double point locus minus the flex curve counted twice."""
    return double_point_class() - 2 * flex_class_S()


# -- degeneration recursions ---------------------------------------------------------

def correspondence_coincidences(a, b) -> PolyD:
    """Coincidences of a correspondence of bidegree ``[a, b]`` on a rational curve."""
    return PolyD.coerce(a) + PolyD.coerce(b)


def inscribed_g12_count() -> PolyD:
    """Divisors of a g^1_2 contained in a divisor of a g^1_{2d-4} on a conic (quoted count)."""
    return 2 * _d() - 5


def contact_point_curve_degree() -> PolyD:
    """Degree of the curve of contact points of tangents from a fixed point to the members.

    It passes once through the d^2 base points and meets a member in d(d-1)
    further points; the total is divided by d.
    """
    d = _d()
    total = d * (d - 1) + d * d
    q, r = total.divmod(d)
    if not r.is_zero():
        raise InvariantError("contact-point count is not divisible by d")
    return q


def improper_multiplicities() -> Tuple[int, int, PolyD, PolyD]:
    """``(nu, mu, e_b, e_n)``: limit multiplicities and the Hurwitz counts at base points and nodes.

    ``e_b``: members tangent at a base point whose tangent there touches the
    member again; the tangent lines at a base point form a ``g^1_{d-2}`` on a
    curve of genus ``d(d-1)/2 - 3`` (after removing the contact).  ``e_n``:
    lines through a node tangent elsewhere, a ``g^1_{d-2}`` on the nodal
    member of genus ``(d-1)(d-2)/2 - 1``.
    """
    d = _d()
    e_b = hurwitz_ramification(d * (d - 1) / 2 - 3, d - 2)
    e_n = hurwitz_ramification((d - 1) * (d - 2) / 2 - 1, d - 2)
    return 2, 4, e_b, e_n


@dataclass(frozen=True)
class RecursionIncrement:
    """Contributions to ``deg(d) - deg(d-2)`` for the bitangent-line curve."""

    type_ii: PolyD
    type_iii: PolyD
    type_iv: PolyD

    @property
    def total(self) -> PolyD:
        return self.type_ii + self.type_iii + self.type_iv


def bitangent_recursion_increment() -> RecursionIncrement:
    """Degenerate a member to a conic plus a degree d-2 curve and count the limits.

    (ii) tangents from the point to the conic (the conic's class, 2), each
         tangent to ``2(d-2) - 2`` members of the residual pencil;
    (iii) coincidences of the correspondence on the conic, minus twice the
         intersections with the contact-point curve of the residual pencil,
         each weighted by ``nu``;
    (iv) inscribed g^1_2 divisors, weighted by ``mu``.
    """
    d = _d()
    nu, mu, _, _ = improper_multiplicities()
    residual = lambda p: p.shift(-2)  # the same invariant for degree d - 2
    conic_class = dual_degree()(2)
    type_ii = conic_class * residual(tangency_cover_degree())
    coinc = correspondence_coincidences(2 * (d - 2) * (d - 3), 4 * (d - 2) * (d - 3))
    # the contact-point curve meets the conic in 2 * degree points, removed with multiplicity two
    spurious = 2 * residual(contact_point_curve_degree())
    type_iii = nu * (coinc - 2 * spurious)
    type_iv = mu * inscribed_g12_count()
    return RecursionIncrement(type_ii, type_iii, type_iv)


def solve_parity_recursion(increment: PolyD, bases: Dict[int, int]) -> PolyD:
    """Polynomial ``P`` with ``P(d) - P(d-2) = increment(d)`` and ``P(b) = v`` on both parity chains.

    Values are generated by iterating the recursion from each base, a
    polynomial of degree ``deg(increment) + 1`` is interpolated through part
    of them, and every generated value is checked against it.  Failure means
    the two chains do not lie on one polynomial.
    """
    if len(bases) != 2 or len({b % 2 for b in bases}) != 2:
        raise InvariantError("need one base on each parity chain")
    need = increment.degree + 2
    pts = []
    for b, v in bases.items():
        val = Fraction(v)
        pts.append((b, val))
        for k in range(1, need + 2):
            dd = b + 2 * k
            val += increment(dd)
            pts.append((dd, val))
    pts.sort()
    P = interpolate(pts[:need])
    if any(P(x) != y for x, y in pts):
        raise InvariantError("recursion values on the two parity chains are not one polynomial")
    return P


def recursion_value(increment: PolyD, bases: Dict[int, int], d: int) -> Fraction:
    """Iterate the recursion down the parity chain of ``d``; zero below the bases."""
    base = next((b for b in bases if b % 2 == d % 2), None)
    if base is None:
        raise InvariantError("no base on this parity chain")
    if d < base:
        return Fraction(0)
    val = Fraction(bases[base])
    for dd in range(base + 2, d + 1, 2):
        val += increment(dd)
    return val


BITANGENT_BASES = {2: 0, 3: 0}
TRITANGENT_BASES = {3: 0, 4: 0}


def bitangent_line_degree(route: str = "chern") -> PolyD:
    """Degree of the curve in the dual plane swept by bitangents of the members."""
    if route == "chern":
        # each bitangent line carries two points of the bitangent curve
        return s_pair(bitangent_class_S(), pullback_M()) / 2
    if route == "recursion":
        return solve_parity_recursion(bitangent_recursion_increment().total, BITANGENT_BASES)
    raise InvariantError(f"unknown route {route!r}")


def tritangent_increment() -> PolyD:
    """The degeneration increment for tritangents (quoted; its derivation is not carried out)."""
    d = _d()
    return 10 * d**4 - 112 * d**3 + 350 * d**2 - 56 * d - 720


# -- classical constants --------------------------------------------------------------

def plucker_flexes() -> PolyD:
    d = _d()
    return 3 * d * (d - 2)


def plucker_bitangents() -> PolyD:
    d = _d()
    return d * (d - 2) * (d * d - 9) / 2


def dual_degree() -> PolyD:
    d = _d()
    return d * (d - 1)


# -- Riemann-Hurwitz ---------------------------------------------------------------------

def hurwitz_ramification(genus, degree) -> PolyD:
    """Total ramification ``2g - 2 + 2n`` of a degree-n cover of the line by a genus-g curve."""
    return 2 * PolyD.coerce(genus) - 2 + 2 * PolyD.coerce(degree)


def hurwitz_genus(degree, ramification) -> PolyD:
    """Genus ``(-2n + R + 2)/2`` of a degree-n cover of the line with total ramification R."""
    g = (-2 * PolyD.coerce(degree) + PolyD.coerce(ramification) + 2) / 2
    if not integer_valued(g):
        raise InvariantError(f"genus {render(g)} is not an integer at every integer d")
    return g


# -- the bitangent curve ------------------------------------------------------------------

def bitangent_point_degree(route: str = "class") -> PolyD:
    """Degree of the plane curve of contact points of bitangents to members."""
    d = _d()
    if route == "class":
        return bitangent_class_S().h
    if route == "plane_counting":
        # a member meets it at its bitangent contacts (2 per bitangent) and at the base points
        _, _, e_b, _ = improper_multiplicities()
        total = 2 * plucker_bitangents() + d * d * e_b
        q, r = total.divmod(d)
        if not r.is_zero():
            raise InvariantError("plane-counting total not divisible by d")
        return q
    raise InvariantError(f"unknown route {route!r}")


def bitangent_point_pa(route: str = "adjunction") -> PolyD:
    """Arithmetic genus of the curve of bitangent contact points."""
    B = bitangent_class_S()
    d = _d()
    if route == "adjunction":
        return s_adjunction_genus(B)
    if route == "plane_model":
        return plane_model_genus(B.h, [(d * d, B.eb), (3 * (d - 1) ** 2, B.en)])
    raise InvariantError(f"unknown route {route!r}")


def flex_bitangent_degree() -> PolyD:
    """Flex-bitangent hypersurface degree: bitangent curve . flex curve minus the hyperflex cusps."""
    return s_pair(bitangent_class_S(), flex_class_S()) - 2 * hyperflex_degree()


def salmon_claimed_formula() -> PolyD:
    """The classical value ``3(d-4)(3d^3+5d^2-32d+18)``, kept for comparison only."""
    return FACTORED["salmon_claimed"].expand()


@dataclass(frozen=True)
class RamificationTerms:
    hyperflex_lines: PolyD
    nodal_members: PolyD
    flex_bitangents: PolyD

    @property
    def total(self) -> PolyD:
        return self.hyperflex_lines + self.nodal_members + self.flex_bitangents


def bitangent_curve_ramification() -> RamificationTerms:
    """Ramification of the bitangent curve over the pencil line, term by term.

    Hyperflex lines are simple branch points; over each nodal member the two
    points of every line through the node tangent elsewhere both ramify; each
    flex bitangent contributes 4.
    """
    _, _, _, e_n = improper_multiplicities()
    return RamificationTerms(hyperflex_degree(), 2 * nodal_fiber_count() * e_n, 4 * flex_bitangent_degree())


def displayed_ramification_total() -> PolyD:
    """The total printed alongside the three terms above; it is not their sum."""
    d = _d()
    return 9 * d**4 - 21 * d**3 - 102 * d**2 + 300 * d - 144


def bitangent_curve_pg() -> PolyD:
    """Geometric genus of the bitangent curve, by Hurwitz over the pencil line."""
    cover_degree = 2 * plucker_bitangents()  # each bitangent contributes its two contact points
    return hurwitz_genus(cover_degree, bitangent_curve_ramification().total)


def tritangent_degree(route: str = "genus_defect") -> PolyD:
    """Degree of the hypersurface of curves with a tritangent line."""
    if route == "genus_defect":
        defect = bitangent_point_pa() - bitangent_curve_pg()
        t = defect / 3
        if not integer_valued(t):
            raise InvariantError("genus defect is not divisible by 3")
        return t
    if route == "recursion":
        return solve_parity_recursion(tritangent_increment(), TRITANGENT_BASES)
    raise InvariantError(f"unknown route {route!r}")


def bitangent_line_genus() -> PolyD:
    """Geometric genus of the bitangent-line curve: the bitangent curve double-covers it."""
    g = (2 * bitangent_curve_pg() - 2 - hyperflex_degree() + 4) / 4
    if not integer_valued(g):
        raise InvariantError("bitangent-line genus is not integer-valued")
    return g


def extra_node_prediction() -> PolyD:
    """Singularities of the bitangent-line curve beyond its tritangent triple points."""
    deg = bitangent_line_degree()
    p_a_minus_triple = plane_model_genus(deg, [(tritangent_degree(), 3)])
    return p_a_minus_triple - bitangent_line_genus()


# displayed values that disagree with the computed ones
STATED_EXTRA_NODES_AT_3 = 12


# -- the table -------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantRow:
    invariant_id: str
    derivation: str
    value: PolyD
    factored_form: Optional[str] = None
    values: Tuple[Tuple[int, Fraction], ...] = ()
    routes_agree: bool = True

    def __post_init__(self):
        if self.derivation not in METHODS:
            raise InvariantError(f"unknown derivation tag {self.derivation!r}")


def derivations() -> Dict[str, List[Tuple[str, Callable[[], PolyD]]]]:
    """Every invariant id with its available ``(method, thunk)`` routes."""
    dp = lambda attr: (lambda: getattr(bitangent_class_S(), attr))
    return {
        "hyperflex": [("chern", hyperflex_degree), ("severi", severi_cusp_count)],
        "flex_point_curve_degree": [("chern", lambda: flex_degrees()[0])],
        "flex_line_curve_degree": [("chern", lambda: flex_degrees()[1]), ("closed_form", plucker_flexes)],
        "flex_curve_genus": [("closed_form", flex_curve_genus)],
        "branch_curve_genus": [("closed_form", branch_curve_genus)],
        "euler_surface": [("closed_form", euler_surface)],
        "nodal_fiber_count": [("closed_form", nodal_fiber_count)],
        "tangency_cover_degree": [("closed_form", tangency_cover_degree)],
        "dual_degree": [("closed_form", dual_degree)],
        "plucker_bitangents": [("closed_form", plucker_bitangents)],
        "double_point_h": [("double_point", lambda: double_point_class().h)],
        "double_point_eb": [("double_point", lambda: double_point_class().eb)],
        "double_point_en": [("double_point", lambda: double_point_class().en)],
        "bitangent_line_degree": [("chern", lambda: bitangent_line_degree("chern")),
                                  ("recursion", lambda: bitangent_line_degree("recursion"))],
        "bitangent_point_degree": [("double_point", lambda: bitangent_point_degree("class")),
                                   ("elementary", lambda: bitangent_point_degree("plane_counting"))],
        "bitangent_point_pa": [("double_point", lambda: bitangent_point_pa("adjunction")),
                               ("elementary", lambda: bitangent_point_pa("plane_model"))],
        "e_b": [("hurwitz", lambda: improper_multiplicities()[2]), ("double_point", dp("eb"))],
        "e_n": [("hurwitz", lambda: improper_multiplicities()[3]), ("double_point", dp("en"))],
        "flex_bitangent": [("double_point", flex_bitangent_degree)],
        "salmon_claimed": [("closed_form", salmon_claimed_formula)],
        "bitangent_curve_ramification": [("hurwitz", lambda: bitangent_curve_ramification().total)],
        "bitangent_curve_pg": [("hurwitz", bitangent_curve_pg)],
        "tritangent": [("genus_defect", lambda: tritangent_degree("genus_defect")),
                       ("recursion", lambda: tritangent_degree("recursion"))],
        "bitangent_line_genus": [("hurwitz", bitangent_line_genus)],
        "extra_node_prediction": [("genus_defect", extra_node_prediction)],
    }


def invariant_table(d_min: int, d_max: int) -> List[InvariantRow]:
    """One row per (invariant, route) with values at ``d_min..d_max`` and cross-route status."""
    if not 3 <= d_min <= d_max:
        raise InvariantError("need 3 <= d_min <= d_max")
    rows = []
    for inv, routes in derivations().items():
        vals = [(m, f()) for m, f in routes]
        agree = all(v == vals[0][1] for _, v in vals)
        fac = FACTORED.get(inv)
        for m, v in vals:
            rows.append(InvariantRow(
                inv, m, v,
                str(fac) if fac is not None and fac.expand() == v else None,
                tuple((d, v(d)) for d in range(d_min, d_max + 1)),
                agree,
            ))
    return rows
