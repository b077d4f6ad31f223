"""Concrete plane curves and pencils with exact rational coefficients."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence, Tuple

from .exact.multipoly import MultiPoly

XYZ = ("x", "y", "z")

Point = Tuple[Fraction, Fraction, Fraction]


class CurveError(ValueError):
    """Raised for contract violations on curves, pencils and lines."""


def _pt(p) -> Point:
    if len(p) != 3:
        raise CurveError(f"projective point needs 3 coordinates, got {p!r}")
    q = tuple(Fraction(c) for c in p)
    if not any(q):
        raise CurveError("the zero vector is not a projective point")
    return q


def monomials(degree: int):
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            yield (i, j, degree - i - j)


@dataclass(frozen=True)
class PlaneCurve:
    poly: MultiPoly
    degree: int

    def __post_init__(self):
        if self.poly.vars != XYZ:
            raise CurveError(f"plane curves live in variables {XYZ}, got {self.poly.vars}")
        if self.poly.is_zero():
            raise CurveError("the zero polynomial is not a curve")
        if not self.poly.is_homogeneous() or self.poly.degree() != self.degree:
            raise CurveError(f"polynomial is not homogeneous of degree {self.degree}")

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "PlaneCurve":
        return cls(poly, poly.degree())

    def __call__(self, point) -> Fraction:
        x, y, z = _pt(point)
        return Fraction(self.poly.evaluate({"x": x, "y": y, "z": z}))

    def partials(self):
        return tuple(self.poly.diff(v) for v in XYZ)

    def transform(self, matrix) -> "PlaneCurve":
        """The curve ``F(M v)``: pulled back along the linear map ``v -> M v``."""
        x, y, z = MultiPoly.gens(*XYZ)
        forms = [sum((Fraction(matrix[i][j]) * g for j, g in enumerate((x, y, z))), MultiPoly.zero(XYZ)) for i in range(3)]
        return PlaneCurve(self.poly.subs(dict(zip(XYZ, forms))), self.degree)

    def __str__(self):
        return str(self.poly)


@dataclass(frozen=True)
class CurvePencil:
    """Members ``f + t g``; ``g`` itself is the member at ``t = infinity``."""

    f: PlaneCurve
    g: PlaneCurve
    seed: Optional[int] = None

    def __post_init__(self):
        if self.f.degree != self.g.degree:
            raise CurveError("pencil members must have equal degree")
        if proportional(self.f.poly, self.g.poly):
            raise CurveError("pencil generators are proportional")

    @property
    def degree(self) -> int:
        return self.f.degree

    def member(self, t) -> PlaneCurve:
        return PlaneCurve(self.f.poly + self.g.poly * Fraction(t), self.degree)

    def transform(self, matrix) -> "CurvePencil":
        return CurvePencil(self.f.transform(matrix), self.g.transform(matrix), self.seed)

    def generic_member(self, var: str = "t") -> MultiPoly:
        """``f + t g`` as a polynomial in ``x, y, z, t``."""
        V = XYZ + (var,)
        t = MultiPoly.gens(*V)[3]
        return self.f.poly.with_vars(V) + t * self.g.poly.with_vars(V)


@dataclass(frozen=True)
class LineParam:
    """The line of points ``base + s * direction``."""

    base: Point
    direction: Point

    def __post_init__(self):
        b, d = _pt(self.base), _pt(self.direction)
        object.__setattr__(self, "base", b)
        object.__setattr__(self, "direction", d)
        cross = (b[1] * d[2] - b[2] * d[1], b[2] * d[0] - b[0] * d[2], b[0] * d[1] - b[1] * d[0])
        if not any(cross):
            raise CurveError("base and direction are the same projective point")

    def point(self, s) -> tuple:
        return tuple(b + s * d for b, d in zip(self.base, self.direction))

    def forms(self, var: str = "s", vars: Sequence[str] = None):
        vars = tuple(vars) if vars is not None else (var,)
        s = MultiPoly.gens(*vars)[vars.index(var)]
        return [s * d + b for b, d in zip(self.base, self.direction)]


def proportional(a: MultiPoly, b: MultiPoly) -> bool:
    if a.is_zero() or b.is_zero():
        return True
    ta, tb = a.terms(), b.terms()
    if ta.keys() != tb.keys():
        return False
    ratio = None
    for k, ca in ta.items():
        r = Fraction(ca) / Fraction(tb[k])
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


# -- constructions -------------------------------------------------------------

def hessian(c: PlaneCurve) -> PlaneCurve:
    """Determinant of the matrix of second partials (degree ``3(d-2)``)."""
    if c.degree < 2:
        raise CurveError("Hessian needs degree >= 2")
    det = hessian_form(c.poly)
    if det.is_zero():
        raise CurveError("Hessian vanishes identically (curve is a cone or has a line component structure)")
    return PlaneCurve(det, 3 * (c.degree - 2))


def hessian_form(poly: MultiPoly) -> MultiPoly:
    """Hessian determinant in x, y, z of a polynomial that may carry extra variables."""
    H = [[poly.diff(a).diff(b) for b in XYZ] for a in XYZ]
    return (
        H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1])
        - H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0])
        + H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0])
    )


def polar(c: PlaneCurve, point) -> PlaneCurve:
    """First polar ``sum p_i dF/dx_i`` of degree ``d - 1``."""
    if c.degree < 2:
        raise CurveError("polar needs degree >= 2")
    p = _pt(point)
    out = sum((d * pi for d, pi in zip(c.partials(), p)), MultiPoly.zero(XYZ))
    if out.is_zero():
        raise CurveError(f"zero polar: {p} is singular on every member")
    return PlaneCurve(out, c.degree - 1)


def restrict_to_line(c: PlaneCurve, line: LineParam, var: str = "s") -> MultiPoly:
    """``F(base + s * direction)`` as a univariate ``MultiPoly`` in ``var``."""
    forms = line.forms(var)
    out = _compose(c.poly, forms)
    if out.is_zero():
        raise CurveError("the line is a component of the curve")
    return out


def _compose(poly: MultiPoly, forms) -> MultiPoly:
    """Substitute the three linear forms (over a common variable tuple) for x, y, z."""
    vars = forms[0].vars
    total = MultiPoly.zero(vars)
    cache = {}

    def pw(i, e):
        if (i, e) not in cache:
            cache[(i, e)] = forms[i] ** e
        return cache[(i, e)]

    for (i, j, k), c in poly.terms().items():
        total = total + pw(0, i) * pw(1, j) * pw(2, k) * c
    return total


def member_through(p: CurvePencil, point) -> Fraction:
    """Parameter ``t`` of the unique member through ``point``."""
    fv, gv = p.f(point), p.g(point)
    if fv == 0 and gv == 0:
        raise CurveError(f"{tuple(point)} is a base point: every member passes through it")
    if gv == 0:
        raise CurveError(f"{tuple(point)} lies on the member at infinity g")
    return -fv / gv


# -- random generation ---------------------------------------------------------

RETRY_BUDGET = 50


def random_form(degree: int, rng: random.Random, height: int) -> MultiPoly:
    terms = {m: rng.randint(-height, height) for m in monomials(degree)}
    return MultiPoly(XYZ, terms)


def random_curve(degree: int, seed: int, height: int = 10) -> PlaneCurve:
    rng = random.Random(f"curve:{degree}:{seed}:{height}")
    for _ in range(RETRY_BUDGET):
        f = random_form(degree, rng, height)
        if f.degree() == degree and f.is_homogeneous():
            return PlaneCurve(f, degree)
    raise CurveError("random curve generation exhausted its retry budget")


def random_pencil(degree: int, seed: int, height: int = 10) -> CurvePencil:
    """Deterministic random pencil with integer coefficients bounded by ``height``."""
    if degree < 2:
        raise CurveError("pencil degree must be >= 2")
    if height < 1:
        raise CurveError("height must be positive")
    rng = random.Random(f"pencil:{degree}:{seed}:{height}")
    for _ in range(RETRY_BUDGET):
        f = random_form(degree, rng, height)
        g = random_form(degree, rng, height)
        if f.is_zero() or g.is_zero() or proportional(f, g):
            continue
        return CurvePencil(PlaneCurve(f, degree), PlaneCurve(g, degree), seed)
    raise CurveError("random pencil generation exhausted its retry budget")


def random_nodal_quartic(seed: int, height: int = 10) -> Tuple[PlaneCurve, Point]:
    """A quartic with a node at a rational point, returned with the node.

    Built as ``z^2 Q2 + z C3 + Q4`` (node at ``[0:0:1]``) and moved by a random
    integer projectivity.
    """
    rng = random.Random(f"nodal:{seed}:{height}")
    x, y, z = MultiPoly.gens(*XYZ)
    for _ in range(RETRY_BUDGET):
        a, b, c = (rng.randint(-height, height) for _ in range(3))
        if b * b - 4 * a * c == 0:
            continue  # tangent cone must be two distinct lines
        q2 = a * x**2 + b * x * y + c * y**2
        c3 = sum((rng.randint(-height, height) * x**i * y**(3 - i) for i in range(4)), MultiPoly.zero(XYZ))
        q4 = sum((rng.randint(-height, height) * x**i * y**(4 - i) for i in range(5)), MultiPoly.zero(XYZ))
        F = z**2 * q2 + z * c3 + q4
        M = random_projectivity(rng, 3)
        Minv = _inverse(M)
        curve = PlaneCurve(F, 4).transform(M)
        node = tuple(Minv[i][2] for i in range(3))
        return curve, node
    raise CurveError("nodal quartic generation exhausted its retry budget")


def fermat(degree: int) -> PlaneCurve:
    x, y, z = MultiPoly.gens(*XYZ)
    return PlaneCurve(x**degree + y**degree + z**degree, degree)


def random_projectivity(rng: random.Random, height: int = 3):
    for _ in range(RETRY_BUDGET):
        M = [[rng.randint(-height, height) for _ in range(3)] for _ in range(3)]
        if det3(M) != 0:
            return M
    raise CurveError("could not draw an invertible projectivity")


def random_line(rng: random.Random, height: int = 10) -> LineParam:
    for _ in range(RETRY_BUDGET):
        b = tuple(rng.randint(-height, height) for _ in range(3))
        d = tuple(rng.randint(-height, height) for _ in range(3))
        try:
            return LineParam(b, d)
        except CurveError:
            continue
    raise CurveError("could not draw a line")


def det3(M) -> Fraction:
    return (
        Fraction(M[0][0]) * (Fraction(M[1][1]) * M[2][2] - Fraction(M[1][2]) * M[2][1])
        - Fraction(M[0][1]) * (Fraction(M[1][0]) * M[2][2] - Fraction(M[1][2]) * M[2][0])
        + Fraction(M[0][2]) * (Fraction(M[1][0]) * M[2][1] - Fraction(M[1][1]) * M[2][0])
    )


def _inverse(M):
    det = det3(M)
    if det == 0:
        raise CurveError("singular matrix")
    cof = [[None] * 3 for _ in range(3)]
    for i, j in product(range(3), repeat=2):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = Fraction(M[r[0]][c[0]]) * M[r[1]][c[1]] - Fraction(M[r[0]][c[1]]) * M[r[1]][c[0]]
        cof[i][j] = (-1) ** (i + j) * minor
    return [[cof[j][i] / det for j in range(3)] for i in range(3)]


def apply_matrix(M, p) -> Point:
    return tuple(sum(Fraction(M[i][j]) * p[j] for j in range(3)) for i in range(3))


# -- serialization ---------------------------------------------------------------
# JSON:  {"type": "PlaneCurve", "degree": d,
#         "terms": [{"exponents": [i, j, k], "num": n, "den": m}, ...]}
#        {"type": "CurvePencil", "seed": s | null, "f": <PlaneCurve>, "g": <PlaneCurve>}
# Text:  one "i j k num/den" record per line; a pencil is two curve blocks
#        separated by a line containing only "--".

def curve_to_records(c: PlaneCurve):
    recs = []
    for exps, coef in c.poly.items():
        q = Fraction(coef)
        recs.append({"exponents": list(exps), "num": q.numerator, "den": q.denominator})
    return recs


def curve_to_dict(c: PlaneCurve) -> dict:
    return {"type": "PlaneCurve", "degree": c.degree, "terms": curve_to_records(c)}


def curve_from_dict(data: dict) -> PlaneCurve:
    if data.get("type", "PlaneCurve") != "PlaneCurve":
        raise CurveError(f"expected a PlaneCurve record, got {data.get('type')!r}")
    terms = {}
    for rec in data["terms"]:
        e = tuple(int(v) for v in rec["exponents"])
        terms[e] = terms.get(e, 0) + Fraction(int(rec["num"]), int(rec.get("den", 1)))
    poly = MultiPoly(XYZ, terms)
    degree = int(data.get("degree", poly.degree()))
    return PlaneCurve(poly, degree)


def pencil_to_dict(p: CurvePencil) -> dict:
    return {"type": "CurvePencil", "seed": p.seed, "f": curve_to_dict(p.f), "g": curve_to_dict(p.g)}


def pencil_from_dict(data: dict) -> CurvePencil:
    if data.get("type") != "CurvePencil":
        raise CurveError(f"expected a CurvePencil record, got {data.get('type')!r}")
    return CurvePencil(curve_from_dict(data["f"]), curve_from_dict(data["g"]), data.get("seed"))


def dumps(obj) -> str:
    if isinstance(obj, PlaneCurve):
        return json.dumps(curve_to_dict(obj), sort_keys=True)
    if isinstance(obj, CurvePencil):
        return json.dumps(pencil_to_dict(obj), sort_keys=True)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str):
    data = json.loads(text)
    if data.get("type") == "CurvePencil":
        return pencil_from_dict(data)
    return curve_from_dict(data)


def curve_to_text(c: PlaneCurve) -> str:
    lines = []
    for rec in curve_to_records(c):
        i, j, k = rec["exponents"]
        lines.append(f"{i} {j} {k} {rec['num']}/{rec['den']}")
    return "\n".join(lines) + "\n"


def curve_from_text(text: str) -> PlaneCurve:
    terms = {}
    for raw in text.splitlines():
        raw = raw.split("#", 1)[0].strip()
        if not raw:
            continue
        parts = raw.split()
        if len(parts) != 4:
            raise CurveError(f"bad curve record: {raw!r}")
        e = tuple(int(v) for v in parts[:3])
        terms[e] = terms.get(e, 0) + Fraction(parts[3])
    return PlaneCurve.from_poly(MultiPoly(XYZ, terms))


def pencil_to_text(p: CurvePencil) -> str:
    return curve_to_text(p.f) + "--\n" + curve_to_text(p.g)


def pencil_from_text(text: str, seed: Optional[int] = None) -> CurvePencil:
    blocks = [b for b in text.split("\n--\n")]
    if len(blocks) != 2:
        raise CurveError("a pencil needs exactly two curve blocks separated by '--'")
    return CurvePencil(curve_from_text(blocks[0]), curve_from_text(blocks[1]), seed)
