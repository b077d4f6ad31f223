"""Resultants, subresultants and discriminants of ``MultiPoly`` values.

Two independent routes to the resultant are kept: the fraction-free
subresultant PRS (default) and the Sylvester determinant expanded by
Bareiss elimination.  Principal subresultant coefficients come from the
determinantal definition, so their signs are the textbook ones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .multipoly import MultiPoly, divexact


class EliminationError(ValueError):
    pass


def _one(vars) -> MultiPoly:
    return MultiPoly.const(1, vars)


def prem(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a  mod  b`` in ``var``."""
    A = a.coeffs(var)
    B = b.coeffs(var)
    db = len(B) - 1
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if len(A) - 1 < db:
        return a
    lcb = B[-1]
    for k in range(len(A) - 1, db - 1, -1):
        top = A[k]
        A = [c * lcb for c in A[:k]]
        if not top.is_zero():
            for j in range(db):
                if not B[j].is_zero():
                    A[k - db + j] = A[k - db + j] - top * B[j]
    while len(A) > 0 and A[-1].is_zero():
        A.pop()
    if not A:
        return MultiPoly.zero(a.vars)
    return MultiPoly.from_coeffs(A, var, a.vars)


def _check_positive(p: MultiPoly, var: str, name: str):
    if p.degree(var) < 1:
        raise EliminationError(f"{name} has degree {p.degree(var)} in {var!r}; need >= 1")


def subresultant_prs(p: MultiPoly, q: MultiPoly, var: str) -> List[MultiPoly]:
    """Fraction-free subresultant PRS ``[p, q, r_2, ...]`` in ``var``.

    Members are (up to sign) the regular subresultants of ``p`` and ``q``; the
    last member is a gcd of ``p`` and ``q`` over the fraction field.
    """
    _check_positive(p, var, "p")
    _check_positive(q, var, "q")
    if p.degree(var) < q.degree(var):
        raise EliminationError("subresultant_prs needs deg p >= deg q")
    seq = [p, q]
    A, B = p, q
    g = h = _one(p.vars)
    while B.degree(var) > 0:
        delta = A.degree(var) - B.degree(var)
        R = prem(A, B, var)
        if R.is_zero():
            break
        A, B = B, divexact(R, g * h ** delta)
        g = A.leading_coeff(var)
        h = divexact(g ** delta, h ** (delta - 1)) if delta >= 1 else h
        seq.append(B)
    return seq


def resultant(p: MultiPoly, q: MultiPoly, var: str, trace: list = None) -> MultiPoly:
    """Sylvester resultant ``Res_var(p, q)`` via the subresultant PRS.

    If ``trace`` is a list, the remainder sequence members are appended to it.
    """
    p._same(q)
    _check_positive(p, var, "p")
    _check_positive(q, var, "q")
    A, B = p, q
    s = 1
    if A.degree(var) < B.degree(var):
        A, B = B, A
        if A.degree(var) % 2 and B.degree(var) % 2:
            s = -1
    g = h = _one(p.vars)
    while True:
        dA, dB = A.degree(var), B.degree(var)
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = prem(A, B, var)
        if R.is_zero():
            return MultiPoly.zero(p.vars)
        A, B = B, divexact(R, g * h ** delta)
        if trace is not None:
            trace.append(B)
        g = A.leading_coeff(var)
        h = divexact(g ** delta, h ** (delta - 1)) if delta >= 1 else h
        if B.degree(var) <= 0:
            dA = A.degree(var)
            if dA == 1:
                h = B
            else:
                h = divexact(B ** dA, h ** (dA - 1))
            return h * s


def gcd_degree(p: MultiPoly, q: MultiPoly, var: str) -> int:
    """Degree in ``var`` of ``gcd(p, q)`` over the fraction field of the other variables."""
    if p.degree(var) < q.degree(var):
        p, q = q, p
    seq = subresultant_prs(p, q, var)
    last = seq[-1]
    return max(last.degree(var), 0)


# -- determinantal route ------------------------------------------------------

def bareiss_det(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant of a square matrix of ``MultiPoly`` entries."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    vars = rows[0][0].vars
    M = [list(r) for r in rows]
    sign = 1
    prev = _one(vars)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(vars)
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                num = M[i][j] * pivot - mik * M[k][j]
                M[i][j] = divexact(num, prev) if not num.is_zero() else num
            M[i][k] = MultiPoly.zero(vars)
        prev = pivot
    return M[n - 1][n - 1] * sign


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> List[List[MultiPoly]]:
    m, n = p.degree(var), q.degree(var)
    P = list(reversed(p.coeffs(var)))
    Q = list(reversed(q.coeffs(var)))
    z = MultiPoly.zero(p.vars)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([z] * i + P + [z] * (size - i - len(P)))
    for i in range(m):
        rows.append([z] * i + Q + [z] * (size - i - len(Q)))
    return rows


def sylvester_resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Slow-path resultant: the Sylvester determinant."""
    _check_positive(p, var, "p")
    _check_positive(q, var, "q")
    return bareiss_det(sylvester_matrix(p, q, var))


def _subres_rows(p, q, var, j):
    m, n = p.degree(var), q.degree(var)
    width = m + n - j
    P = list(reversed(p.coeffs(var)))
    Q = list(reversed(q.coeffs(var)))
    z = MultiPoly.zero(p.vars)
    rows = []
    for i in range(n - j):
        rows.append([z] * i + P + [z] * (width - i - len(P)))
    for i in range(m - j):
        rows.append([z] * i + Q + [z] * (width - i - len(Q)))
    return rows, width


def subresultant(p: MultiPoly, q: MultiPoly, var: str, j: int) -> MultiPoly:
    """The ``j``-th subresultant polynomial ``S_j`` (degree <= j in ``var``)."""
    m, n = p.degree(var), q.degree(var)
    if not 0 <= j < min(m, n):
        raise EliminationError(f"subresultant index {j} out of range for degrees {m}, {n}")
    rows, width = _subres_rows(p, q, var, j)
    k = m + n - 2 * j  # square size
    lead = [r[: k - 1] for r in rows]
    coeffs = []
    for i in range(j + 1):
        col = width - 1 - i  # column of x^i
        coeffs.append(bareiss_det([lr + [r[col]] for lr, r in zip(lead, rows)]))
    return MultiPoly.from_coeffs(coeffs, var, p.vars)


def principal_subresultant_coefficients(p: MultiPoly, q: MultiPoly, var: str, upto: int = None) -> List[MultiPoly]:
    """``[psc_0, psc_1, ...]``; ``psc_0`` is the resultant.

    ``gcd(p, q)`` has degree >= k iff ``psc_0 .. psc_{k-1}`` all vanish.
    """
    m, n = p.degree(var), q.degree(var)
    if m < n:
        raise EliminationError("need deg p >= deg q")
    top = n - 1 if upto is None else min(upto, n - 1)
    out = []
    for j in range(top + 1):
        rows, width = _subres_rows(p, q, var, j)
        k = m + n - 2 * j
        out.append(bareiss_det([r[:k] for r in rows]))
    return out


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    """``Res_var(p, dp/dvar) / lc(p)``, exact."""
    deg = p.degree(var)
    if deg < 2:
        raise EliminationError(f"discriminant needs degree >= 2 in {var!r}, got {deg}")
    lc = p.leading_coeff(var)
    if lc.is_zero():
        raise EliminationError("degenerate leading coefficient")
    r = resultant(p, p.diff(var), var)
    sign = -1 if (deg * (deg - 1) // 2) % 2 else 1
    try:
        return divexact(r, lc) * sign
    except ArithmeticError as exc:  # pragma: no cover - cannot happen for a true discriminant
        raise EliminationError("leading coefficient does not divide the resultant") from exc
