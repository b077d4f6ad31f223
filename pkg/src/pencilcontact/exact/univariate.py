"""Dense univariate helpers over Z for the oracle's eliminants.

Polynomials are lists of ints, lowest degree first.  Everything here is
exact; gcds use the primitive PRS so coefficients stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple


def trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[int]) -> int:
    return len(a) - 1


def content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def primitive(a: Sequence) -> List[int]:
    """Integral primitive part with positive leading coefficient."""
    a = list(a)
    if any(isinstance(c, Fraction) for c in a):
        den = 1
        for c in a:
            c = Fraction(c)
            den = den * c.denominator // gcd(den, c.denominator)
        a = [int(Fraction(c) * den) for c in a]
    a = trim([int(c) for c in a])
    if not a:
        return a
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def deriv(a: Sequence[int]) -> List[int]:
    return [k * a[k] for k in range(1, len(a))]


def prem(a: Sequence[int], b: Sequence[int]) -> List[int]:
    a = list(a)
    db = len(b) - 1
    lcb = b[-1]
    while len(a) - 1 >= db and a:
        top = a[-1]
        shift = len(a) - 1 - db
        a = [c * lcb for c in a[:-1]]
        for j in range(db):
            a[shift + j] -= top * b[j]
        trim(a)
    return a


def gcd_poly(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Primitive gcd via the primitive PRS."""
    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = prem(a, b)
        a, b = b, primitive(r)
    if not b:
        return primitive(a)
    return [1]


def divexact(a: Sequence[int], b: Sequence[int]) -> List[int]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        if any(a):
            raise ArithmeticError("inexact division")
        return []
    q = [0] * (len(a) - db)
    lcb = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c % lcb:
            raise ArithmeticError("inexact division")
        f = c // lcb
        q[k - db] = f
        if f:
            for j in range(db + 1):
                a[k - db + j] -= f * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact division")
    return trim(q)


def squarefree_decomposition(a: Sequence) -> List[Tuple[List[int], int]]:
    """Yun's algorithm: ``[(f_i, i)]`` with ``a ~ prod f_i^i``, ``f_i`` squarefree and coprime."""
    f = primitive(a)
    if len(f) <= 1:
        return []
    out = []
    fp = deriv(f)
    g = gcd_poly(f, fp)
    b = divexact_q(f, g)
    c = divexact_q(fp, g)
    dd = sub(c, deriv(b))
    i = 1
    while len(b) > 1:
        h = gcd_poly(b, dd)
        b_next = divexact_q(b, h)
        c = divexact_q(dd, h)
        if len(h) > 1:
            out.append((h, i))
        b = b_next
        dd = sub(c, deriv(b))
        i += 1
    return out


def divexact_q(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Exact division over Q, result made integral and primitive up to the true quotient's content."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    db = len(b) - 1
    if len(a) - 1 < db:
        return []
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        f = a[k] / b[-1]
        q[k - db] = f
        if f:
            for j in range(db + 1):
                a[k - db + j] -= f * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact division")
    # keep scaling: return an integral multiple
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    return trim([int(c * den) for c in q])


def sub(a: Sequence[int], b: Sequence[int]) -> List[int]:
    n = max(len(a), len(b))
    return trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def remove_factor(a: Sequence[int], f: Sequence[int]) -> Tuple[List[int], int]:
    """Divide out every power of the squarefree part of ``gcd(a, f)``; return (cofactor, degree removed)."""
    a = primitive(a)
    removed = 0
    while True:
        g = gcd_poly(a, f)
        if len(g) <= 1:
            return a, removed
        a = primitive(divexact_q(a, g))
        removed += len(g) - 1
