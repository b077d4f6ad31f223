"""Exact elimination to one variable, then multiprecision roots and fiber matching.

``solve_pair`` finds the affine common zeros of two bivariate integer
polynomials with their intersection multiplicities.  The eliminant
``Res_y(P, Q)`` is computed exactly and split by exact squarefree
decomposition, so a multiplicity is read off the decomposition rather than
guessed from clustered floats.  Each root ``x0`` is lifted to ``y0`` from the
degree-one member of the subresultant sequence specialized at ``x0``; when
that member is missing or the lift fails its residual test, the fiber
``P(x0, y)`` is rooted and matched against ``Q`` instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import mpmath

from ..exact import univariate as U
from ..exact.elimination import resultant
from ..exact.multipoly import MultiPoly
from .roots import NonConvergence, exact_roots, mp_aberth

log = logging.getLogger(__name__)


class DegenerateConfiguration(RuntimeError):
    """The chosen coordinates or data are not generic enough; retry with new ones."""


@dataclass(frozen=True)
class Solution:
    x: mpmath.mpc
    y: mpmath.mpc
    multiplicity: int


@dataclass
class Eliminant:
    """Exact univariate eliminant with its squarefree decomposition."""

    coeffs: List[int]
    factors: List[Tuple[List[int], int]]
    removed_degree: int = 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def multiplicity_total(self) -> int:
        return sum((len(f) - 1) * m for f, m in self.factors)


def working_dps(*polys: MultiPoly, base: int = 30) -> int:
    """Digits needed so evaluating these polynomials loses nothing to cancellation."""
    bits = max((p.max_coeff_bits() for p in polys), default=0)
    return base + int(bits * 0.302) + 10


def to_univariate(p: MultiPoly, var: str) -> List[int]:
    """Integer primitive coefficient list of a polynomial that only involves ``var``."""
    others = [v for v in p.free_vars() if v != var]
    if others:
        raise ValueError(f"expected a polynomial in {var!r} only, found {others}")
    return U.primitive(p.univariate(var))


def eliminant(R: Sequence[int], strip: Sequence[Sequence[int]] = ()) -> Eliminant:
    """Squarefree decomposition of ``R`` after removing every power of the ``strip`` factors."""
    coeffs = U.primitive(R)
    if not coeffs:
        raise DegenerateConfiguration("eliminant vanishes identically (common component)")
    removed = 0
    for s in strip:
        s = U.primitive(s)
        if len(s) > 1:
            coeffs, k = U.remove_factor(coeffs, s)
            removed += k
    return Eliminant(coeffs, U.squarefree_decomposition(coeffs), removed)


def _rel_residual(p: MultiPoly, point: dict) -> mpmath.mpf:
    """|p(point)| divided by the sum of the absolute term values."""
    num = p.evaluate(point)
    den = mpmath.mpf(0)
    absvals = {k: abs(v) for k, v in point.items()}
    for exps, c in p.items():
        term = abs(mpmath.mpf(c.numerator) / c.denominator) if hasattr(c, "numerator") else abs(c)
        for v, e in zip(p.vars, exps):
            if e:
                term *= absvals[v] ** e
        den += term
    return abs(num) / den if den else abs(num)


def _lift_candidates(P: MultiPoly, x: str, y: str, x0, dps: int) -> List[mpmath.mpc]:
    fiber = [c.evaluate({x: x0, y: 0}) for c in P.coeffs(y)]
    return mp_aberth(fiber, dps=dps)


def solve_pair(
    P: MultiPoly,
    Q: MultiPoly,
    x: str = "x",
    y: str = "y",
    strip: Sequence[Sequence[int]] = (),
    residual_tol: float = 1e-8,
    cluster_radius: float = 1e-6,
    dps: Optional[int] = None,
) -> Tuple[List[Solution], Eliminant]:
    """Common affine zeros of ``P`` and ``Q`` (polynomials in ``x``, ``y``).

    The projection to ``x`` must be generic: distinct solutions need distinct
    x-coordinates, otherwise ``DegenerateConfiguration`` is raised.  Roots of
    the eliminant that lift to no solution (for example from common zeros at
    infinity) are dropped, and the caller can compare ``sum of
    multiplicities`` with the expected Bezout number.
    """
    if P.degree(y) < Q.degree(y):
        P, Q = Q, P
    prs = [P, Q]
    R = resultant(P, Q, y, trace=prs)
    elim = eliminant(to_univariate(R, x), strip)
    if dps is None:
        dps = working_dps(P, Q, MultiPoly.from_univariate(elim.coeffs, x, P.vars))
    linear = next((m for m in prs if m.degree(y) == 1), None)
    tol = mpmath.mpf(residual_tol)
    out: List[Solution] = []
    with mpmath.workdps(dps):
        for factor, mult in elim.factors:
            try:
                xs = exact_roots(factor, dps=dps)
            except NonConvergence as exc:
                raise DegenerateConfiguration(str(exc)) from exc
            for x0 in xs:
                ys = []
                if linear is not None:
                    c0, c1 = linear.coeffs(y)
                    den = c1.evaluate({x: x0, y: 0})
                    if abs(den) > mpmath.mpf(10) ** (-dps // 2):
                        y0 = -c0.evaluate({x: x0, y: 0}) / den
                        pt = {x: x0, y: y0}
                        if _rel_residual(P, pt) < tol and _rel_residual(Q, pt) < tol:
                            ys = [y0]
                if not ys:
                    cands = _lift_candidates(P, x, y, x0, dps)
                    ys = [yc for yc in cands if _rel_residual(Q, {x: x0, y: yc}) < tol and _rel_residual(P, {x: x0, y: yc}) < tol]
                    ys = _dedupe(ys, cluster_radius)
                    if len(ys) > 1:
                        raise DegenerateConfiguration("two solutions share an x-coordinate")
                if ys:
                    out.append(Solution(x0, ys[0], mult))
                else:
                    log.debug("eliminant root %s has no affine lift", mpmath.nstr(x0, 8))
    return out, elim


def _dedupe(vals, radius):
    kept = []
    for v in vals:
        if all(abs(v - k) > radius * max(1, abs(k)) for k in kept):
            kept.append(v)
    return kept


def affine(poly: MultiPoly) -> MultiPoly:
    """Dehomogenize a form in x, y, z at z = 1, as a polynomial in (x, y)."""
    return poly.subs({"z": 1}).with_vars(("x", "y"))


def check_chart(polys: Sequence[MultiPoly]) -> None:
    """Reject charts where some curve passes through [0:1:0] or two curves meet on z = 0.

    ``polys`` are homogeneous in (x, y, z).  After this check every affine
    dehomogenization has constant leading coefficient in y and all common
    zeros are affine.
    """
    for p in polys:
        if p.evaluate({"x": 0, "y": 1, "z": 0}) == 0:
            raise DegenerateConfiguration("curve passes through the point [0:1:0]")
    at_inf = [p.subs({"z": 0, "x": 1}).with_vars(("x", "y")) for p in polys]
    for i in range(len(at_inf)):
        for j in range(i + 1, len(at_inf)):
            a, b = at_inf[i], at_inf[j]
            if a.degree("y") < 1 or b.degree("y") < 1:
                continue
            if resultant(a, b, "y").is_zero():
                raise DegenerateConfiguration("curves meet on the line at infinity")
