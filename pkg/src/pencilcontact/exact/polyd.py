"""Dense univariate polynomials in the formal degree symbol ``d``.

Every closed-form count in the package is a ``PolyD``: a polynomial in ``d``
with ``Fraction`` coefficients, stored lowest degree first.  Values are
immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


def _is_scalar(x) -> bool:
    return isinstance(x, (PolyD, int, Fraction, str))


class PolyD:
    """Polynomial in ``d`` over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, a: Number) -> "PolyD":
        return cls([a])

    @classmethod
    def d(cls) -> "PolyD":
        return cls([0, 1])

    @classmethod
    def coerce(cls, x) -> "PolyD":
        if isinstance(x, PolyD):
            return x
        return cls([x])

    # -- basic queries ----------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree in ``d``; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __call__(self, v: Number) -> Fraction:
        return poly_eval(self, v)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        other = PolyD.coerce(other)
        n = max(len(self._c), len(other._c))
        return PolyD(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyD(-a for a in self._c)

    def __sub__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self + (-PolyD.coerce(other))

    def __rsub__(self, other):
        return PolyD.coerce(other) - self

    def __mul__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        other = PolyD.coerce(other)
        if not self._c or not other._c:
            return PolyD()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return PolyD(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = PolyD([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a nonzero constant or exact division by a polynomial."""
        if isinstance(other, PolyD) and other.degree > 0:
            q, r = self.divmod(other)
            if not r.is_zero():
                raise ArithmeticError(f"{self} is not divisible by {other}")
            return q
        c = other.leading_coefficient() if isinstance(other, PolyD) else _frac(other)
        if c == 0:
            raise ZeroDivisionError("division of PolyD by zero")
        return PolyD(a / c for a in self._c)

    def divmod(self, other: "PolyD"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        q = [Fraction(0)] * max(len(rem) - other.degree, 0)
        lc = other.leading_coefficient()
        for k in range(len(rem) - 1, other.degree - 1, -1):
            f = rem[k] / lc
            if f:
                q[k - other.degree] = f
                for j, b in enumerate(other._c):
                    rem[k - other.degree + j] -= f * b
        return PolyD(q), PolyD(rem)

    def compose(self, other: "PolyD") -> "PolyD":
        """``self(other(d))`` by Horner's rule."""
        out = PolyD()
        for a in reversed(self._c):
            out = out * other + a
        return out

    def shift(self, k: Number) -> "PolyD":
        """The polynomial ``d -> self(d + k)``."""
        return self.compose(PolyD([k, 1]))

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyD([other])
        if not isinstance(other, PolyD):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(("PolyD", self._c))

    def __repr__(self):
        return f"PolyD({self})"

    def __str__(self):
        return render(self)

    def is_integer_valued_at(self, points: Iterable[int]) -> bool:
        return all(self(v).denominator == 1 for v in points)


def poly_eval(p: PolyD, v: Number) -> Fraction:
    """Exact value of ``p`` at ``d = v``."""
    v = _frac(v)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * v + a
    return acc


def D() -> PolyD:
    return PolyD.d()


def from_roots(roots: Sequence[Number], scale: Number = 1) -> PolyD:
    """``scale * prod(d - r)``."""
    out = PolyD([scale])
    for r in roots:
        out = out * PolyD([-_frac(r), 1])
    return out


def interpolate(points: Sequence[tuple]) -> PolyD:
    """Lagrange interpolation through ``(x, y)`` pairs, exact."""
    out = PolyD()
    for i, (xi, yi) in enumerate(points):
        term = PolyD([yi])
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * PolyD([-_frac(xj), 1]) / (_frac(xi) - _frac(xj))
        out = out + term
    return out


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def render(p: PolyD, var: str = "d") -> str:
    """Expanded rendering, highest degree first, e.g. ``3d^2 - 4d + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
