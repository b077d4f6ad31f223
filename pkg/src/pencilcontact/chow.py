"""Exact arithmetic in the two rank-6 Chow rings and the surface divisor lattice.

``ChowClassPsi`` lives in the ring of the incidence variety of (point, line)
pairs, generated over the dual plane by the hyperplane class ``s1`` and the
relative hyperplane class ``z``.  The relations are

    s1^3 = 0,   z^2 = s1 z - s1^2,   z^3 = 0   (the last one is implied),

and the point class is ``s1^2 z``.  ``ChowClassY`` lives in the ring of the
product of the dual plane with a projective line: ``M^3 = 0``, ``q^2 = 0``,
point class ``M^2 q``.  Coefficients are ``PolyD`` so identities hold for
every degree at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .exact.polyd import PolyD

# exponent pairs (a, b) for s1^a z^b, graded basis order
PSI_BASIS: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1))
PSI_NAMES = ("1", "s1", "z", "s1^2", "s1*z", "s1^2*z")
Y_BASIS: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1))
Y_NAMES = ("1", "M", "q", "M^2", "M*q", "M^2*q")


def _coerce_coeffs(coeffs: Iterable) -> Tuple[PolyD, ...]:
    out = tuple(PolyD.coerce(c) for c in coeffs)
    if len(out) != 6:
        raise ValueError(f"expected 6 coefficients, got {len(out)}")
    return out


def reduce_psi(monomials: Mapping[Tuple[int, int], object], use_z_cubed: bool = True) -> Tuple[PolyD, ...]:
    """Normal form of a polynomial in (s1, z) given as ``{(a, b): coeff}``.

    Rewrites ``z^2 -> s1 z - s1^2`` until every z-exponent is below 2, then
    kills ``s1^a`` for ``a >= 3``.  With ``use_z_cubed=False`` the relation
    ``z^3 = 0`` is never applied directly, which shows it is redundant.
    """
    work: Dict[Tuple[int, int], PolyD] = {}
    for k, c in monomials.items():
        c = PolyD.coerce(c)
        if not c.is_zero():
            work[k] = work.get(k, PolyD()) + c
    out: Dict[Tuple[int, int], PolyD] = {}
    while work:
        (a, b), c = work.popitem()
        if c.is_zero() or a >= 3 or a + b > 3:
            continue  # s1^3 = 0; everything above the top degree 3 vanishes
        if b >= 3 and use_z_cubed:
            continue
        if b >= 2:
            for key, sign in (((a + 1, b - 1), 1), ((a + 2, b - 2), -1)):
                work[key] = work.get(key, PolyD()) + c * sign
            continue
        out[(a, b)] = out.get((a, b), PolyD()) + c
    return tuple(out.get(k, PolyD()) for k in PSI_BASIS)


@dataclass(frozen=True)
class ChowClassPsi:
    coefficients: Tuple[PolyD, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _coerce_coeffs(self.coefficients))

    @classmethod
    def from_monomials(cls, monomials: Mapping[Tuple[int, int], object]) -> "ChowClassPsi":
        return cls(reduce_psi(monomials))

    @classmethod
    def one(cls) -> "ChowClassPsi":
        return cls.from_monomials({(0, 0): 1})

    @classmethod
    def sigma1(cls) -> "ChowClassPsi":
        return cls.from_monomials({(1, 0): 1})

    @classmethod
    def zeta(cls) -> "ChowClassPsi":
        return cls.from_monomials({(0, 1): 1})

    def monomials(self) -> Dict[Tuple[int, int], PolyD]:
        return {k: c for k, c in zip(PSI_BASIS, self.coefficients) if not c.is_zero()}

    def graded_part(self, degree: int) -> "ChowClassPsi":
        return ChowClassPsi.from_monomials({k: c for k, c in self.monomials().items() if sum(k) == degree})

    def __add__(self, other):
        other = _psi(other)
        return ChowClassPsi(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return ChowClassPsi(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_psi(other))

    def __mul__(self, other):
        return psi_multiply(self, _psi(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ChowClassPsi.one()
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        return _render(self.coefficients, PSI_NAMES)


def _psi(x) -> ChowClassPsi:
    if isinstance(x, ChowClassPsi):
        return x
    return ChowClassPsi.from_monomials({(0, 0): x})


def psi_multiply(a: ChowClassPsi, b: ChowClassPsi) -> ChowClassPsi:
    """Graded product reduced to normal form."""
    prod: Dict[Tuple[int, int], PolyD] = {}
    for (i, j), c in a.monomials().items():
        for (k, l), e in b.monomials().items():
            key = (i + k, j + l)
            prod[key] = prod.get(key, PolyD()) + c * e
    return ChowClassPsi.from_monomials(prod)


def psi_degree(a) -> PolyD:
    """Coefficient of the point class ``s1^2 z``; accepts a class or an unreduced monomial map."""
    if not isinstance(a, ChowClassPsi):
        a = ChowClassPsi.from_monomials(a)
    return a.coefficients[5]


# -- the ring of the product of the dual plane with a line -------------------------

def reduce_y(monomials: Mapping[Tuple[int, int], object]) -> Tuple[PolyD, ...]:
    out: Dict[Tuple[int, int], PolyD] = {}
    for (a, b), c in monomials.items():
        if a >= 3 or b >= 2:
            continue
        out[(a, b)] = out.get((a, b), PolyD()) + PolyD.coerce(c)
    return tuple(out.get(k, PolyD()) for k in Y_BASIS)


@dataclass(frozen=True)
class ChowClassY:
    coefficients: Tuple[PolyD, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _coerce_coeffs(self.coefficients))

    @classmethod
    def from_monomials(cls, monomials: Mapping[Tuple[int, int], object]) -> "ChowClassY":
        return cls(reduce_y(monomials))

    @classmethod
    def one(cls) -> "ChowClassY":
        return cls.from_monomials({(0, 0): 1})

    @classmethod
    def M(cls) -> "ChowClassY":
        return cls.from_monomials({(1, 0): 1})

    @classmethod
    def q(cls) -> "ChowClassY":
        return cls.from_monomials({(0, 1): 1})

    def monomials(self) -> Dict[Tuple[int, int], PolyD]:
        return {k: c for k, c in zip(Y_BASIS, self.coefficients) if not c.is_zero()}

    def __add__(self, other):
        other = _y(other)
        return ChowClassY(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return ChowClassY(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_y(other))

    def __mul__(self, other):
        return y_multiply(self, _y(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ChowClassY.one()
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        return _render(self.coefficients, Y_NAMES)


def _y(x) -> ChowClassY:
    if isinstance(x, ChowClassY):
        return x
    return ChowClassY.from_monomials({(0, 0): x})


def y_multiply(a: ChowClassY, b: ChowClassY) -> ChowClassY:
    prod: Dict[Tuple[int, int], PolyD] = {}
    for (i, j), c in a.monomials().items():
        for (k, l), e in b.monomials().items():
            key = (i + k, j + l)
            prod[key] = prod.get(key, PolyD()) + c * e
    return ChowClassY.from_monomials(prod)


def y_degree(a: ChowClassY) -> PolyD:
    """Coefficient of the point class ``M^2 q``."""
    return a.coefficients[5]


# -- divisors on the blown-up surface -------------------------------------------------

@dataclass(frozen=True)
class SurfaceDivClass:
    """The class ``h H - eb E_b - en E_n`` (``E_b``, ``E_n``: summed exceptional curves)."""

    h: PolyD
    eb: PolyD = PolyD()
    en: PolyD = PolyD()

    def __post_init__(self):
        for name in ("h", "eb", "en"):
            object.__setattr__(self, name, PolyD.coerce(getattr(self, name)))

    def __add__(self, other: "SurfaceDivClass"):
        return SurfaceDivClass(self.h + other.h, self.eb + other.eb, self.en + other.en)

    def __neg__(self):
        return SurfaceDivClass(-self.h, -self.eb, -self.en)

    def __sub__(self, other: "SurfaceDivClass"):
        return self + (-other)

    def __mul__(self, k):
        k = PolyD.coerce(k)
        return SurfaceDivClass(self.h * k, self.eb * k, self.en * k)

    __rmul__ = __mul__

    def __str__(self):
        from .exact.polyd import render

        return f"[{render(self.h)}]H - [{render(self.eb)}]E_b - [{render(self.en)}]E_n"


def _d() -> PolyD:
    return PolyD.d()


def s_pair(a: SurfaceDivClass, b: SurfaceDivClass) -> PolyD:
    """Intersection number with H^2 = 1, E_b^2 = -d^2, E_n^2 = -3(d-1)^2."""
    d = _d()
    # a = h H - eb E_b - en E_n, so the E-terms carry (-eb)(-eb') E_b^2
    return a.h * b.h - d * d * a.eb * b.eb - 3 * (d - 1) ** 2 * a.en * b.en


def canonical_class() -> SurfaceDivClass:
    """``K = -3H + E_b + E_n``."""
    return SurfaceDivClass(-3, -1, -1)


def s_adjunction_genus(c: SurfaceDivClass) -> PolyD:
    """Arithmetic genus ``1 + (c.c + c.K)/2`` of a curve in the class ``c``."""
    return 1 + (s_pair(c, c) + s_pair(c, canonical_class())) / 2


def plane_model_genus(degree, multiple_points: Sequence[Tuple[object, object]] = ()) -> PolyD:
    """``(D-1)(D-2)/2 - sum count * m(m-1)/2`` for a plane curve of degree ``D``."""
    D = PolyD.coerce(degree)
    g = (D - 1) * (D - 2) / 2
    for count, mult in multiple_points:
        m = PolyD.coerce(mult)
        g = g - PolyD.coerce(count) * m * (m - 1) / 2
    return g


def _render(coeffs: Sequence[PolyD], names: Sequence[str]) -> str:
    from .exact.polyd import render

    parts = []
    for c, n in zip(coeffs, names):
        if c.is_zero():
            continue
        parts.append(f"({render(c)})" if n == "1" else f"({render(c)})*{n}")
    return " + ".join(parts) if parts else "0"
