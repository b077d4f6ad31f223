"""Sparse multivariate polynomials over the rationals.

Exponent vectors are packed into one Python integer (``BITS`` bits per
variable, first variable most significant), so monomial multiplication is
integer addition and integer comparison is lexicographic order.
Coefficients are ``int`` whenever integral and ``Fraction`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

BITS = 24
MASK = (1 << BITS) - 1

Scalar = Union[int, Fraction]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > MASK:
            raise ValueError(f"exponent {e} out of range")
        key = (key << BITS) | e
    return key


def _unpack(key: int, n: int) -> Tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & MASK
        key >>= BITS
    return tuple(out)


class MultiPoly:
    """Immutable sparse polynomial in the named variables ``vars``."""

    __slots__ = ("vars", "_t")

    def __init__(self, vars: Sequence[str], terms: Mapping = None, *, _packed: Dict[int, Scalar] = None):
        self.vars = tuple(vars)
        if _packed is not None:
            self._t = _packed
            return
        t: Dict[int, Scalar] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(self.vars):
                raise ValueError("exponent vector length does not match variables")
            c = _norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
            if c:
                k = _pack(exps)
                t[k] = _norm(t.get(k, 0) + c)
                if not t[k]:
                    del t[k]
        self._t = t

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, vars: Tuple[str, ...], packed: Dict[int, Scalar]) -> "MultiPoly":
        return cls(vars, _packed=packed)

    @classmethod
    def gens(cls, *names: str) -> Tuple["MultiPoly", ...]:
        n = len(names)
        return tuple(cls._raw(tuple(names), {1 << (BITS * (n - 1 - i)): 1}) for i in range(n))

    @classmethod
    def const(cls, c: Scalar, vars: Sequence[str]) -> "MultiPoly":
        c = _norm(c)
        return cls._raw(tuple(vars), {0: c} if c else {})

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls._raw(tuple(vars), {})

    # -- term access ------------------------------------------------------
    def terms(self) -> Dict[Tuple[int, ...], Scalar]:
        n = len(self.vars)
        return {_unpack(k, n): c for k, c in self._t.items()}

    def items(self):
        n = len(self.vars)
        for k, c in sorted(self._t.items(), reverse=True):
            yield _unpack(k, n), c

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(0, 0)

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}; have {self.vars}") from None

    def _shift(self, var: str) -> int:
        return BITS * (len(self.vars) - 1 - self._index(var))

    def degree(self, var: str = None) -> int:
        """Degree in ``var``, or total degree; ``-1`` for zero."""
        if not self._t:
            return -1
        if var is None:
            n = len(self.vars)
            return max(sum(_unpack(k, n)) for k in self._t)
        s = self._shift(var)
        return max((k >> s) & MASK for k in self._t)

    def is_homogeneous(self) -> bool:
        n = len(self.vars)
        degs = {sum(_unpack(k, n)) for k in self._t}
        return len(degs) <= 1

    def leading_term(self):
        """Largest monomial in lex order (first variable most significant)."""
        k = max(self._t)
        return _unpack(k, len(self.vars)), self._t[k]

    def free_vars(self) -> Tuple[str, ...]:
        return tuple(v for v in self.vars if self.degree(v) > 0)

    # -- ring structure ---------------------------------------------------
    def _same(self, other: "MultiPoly"):
        if other.vars != self.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = _norm(t.get(k, 0) + c)
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return MultiPoly._raw(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _norm(other)
            if not c0:
                return MultiPoly.zero(self.vars)
            return MultiPoly._raw(self.vars, {k: _norm(c * c0) for k, c in self._t.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t: Dict[int, Scalar] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MultiPoly._raw(self.vars, {k: _norm(c) for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1) / other
            return self * inv
        return divexact(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self._t == other._t

    def __hash__(self):
        return hash((self.vars, frozenset(self._t.items())))

    # -- calculus / substitution -------------------------------------------
    def diff(self, var: str) -> "MultiPoly":
        s = self._shift(var)
        one = 1 << s
        t = {}
        for k, c in self._t.items():
            e = (k >> s) & MASK
            if e:
                t[k - one] = _norm(c * e)
        return MultiPoly._raw(self.vars, t)

    def coeffs(self, var: str):
        """Dense list ``[c_0, c_1, ...]`` with ``self = sum c_k var^k``.

        The ``c_k`` keep the full variable tuple and have degree 0 in ``var``.
        """
        s = self._shift(var)
        buckets: Dict[int, Dict[int, Scalar]] = {}
        for k, c in self._t.items():
            e = (k >> s) & MASK
            buckets.setdefault(e, {})[k - (e << s)] = c
        if not buckets:
            return []
        top = max(buckets)
        return [MultiPoly._raw(self.vars, buckets.get(e, {})) for e in range(top + 1)]

    @classmethod
    def from_coeffs(cls, coeffs: Sequence["MultiPoly"], var: str, vars: Sequence[str] = None) -> "MultiPoly":
        if vars is None:
            if not coeffs:
                raise ValueError("need vars for an empty coefficient list")
            vars = coeffs[0].vars
        vars = tuple(vars)
        s = BITS * (len(vars) - 1 - vars.index(var))
        t: Dict[int, Scalar] = {}
        for e, c in enumerate(coeffs):
            if isinstance(c, (int, Fraction)):
                c = cls.const(c, vars)
            for k, a in c._t.items():
                if (k >> s) & MASK:
                    raise ValueError("coefficient involves the main variable")
                t[k + (e << s)] = a
        return cls._raw(vars, t)

    def leading_coeff(self, var: str) -> "MultiPoly":
        cs = self.coeffs(var)
        return cs[-1] if cs else MultiPoly.zero(self.vars)

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute numbers or polynomials (same variable tuple) for variables."""
        n = len(self.vars)
        idx = [(self._index(v), val) for v, val in values.items()]
        poly_vals = {i: v for i, v in idx if isinstance(v, MultiPoly)}
        for v in poly_vals.values():
            self._same(v)
        num_vals = {i: v for i, v in idx if not isinstance(v, MultiPoly)}
        powcache: Dict[Tuple[int, int], object] = {}

        def pw(i, e, base):
            key = (i, e)
            if key not in powcache:
                powcache[key] = base ** e
            return powcache[key]

        out: Dict[int, Scalar] = {}
        acc_poly = MultiPoly.zero(self.vars)
        for k, c in self._t.items():
            exps = list(_unpack(k, n))
            coef = c
            for i, v in num_vals.items():
                if exps[i]:
                    coef = coef * pw(i, exps[i], v)
                    exps[i] = 0
            if not coef:
                continue
            if any(exps[i] for i in poly_vals):
                term = MultiPoly._raw(self.vars, {_pack([0 if i in poly_vals else e for i, e in enumerate(exps)]): _norm(coef)})
                for i, v in poly_vals.items():
                    if exps[i]:
                        term = term * pw(i, exps[i], v)
                acc_poly = acc_poly + term
            else:
                kk = _pack(exps)
                out[kk] = _norm(out.get(kk, 0) + coef)
        base = MultiPoly._raw(self.vars, {k: c for k, c in out.items() if c})
        return base + acc_poly if poly_vals else base

    def __call__(self, **values):
        return self.subs(values)

    def evaluate(self, point: Mapping[str, object]):
        """Full evaluation; ``point`` may hold exact or floating values."""
        n = len(self.vars)
        vals = [point[v] for v in self.vars]
        total = 0
        for k, c in self._t.items():
            term = c
            for i, e in enumerate(_unpack(k, n)):
                if e:
                    term = term * vals[i] ** e
            total = total + term
        return total

    def with_vars(self, new_vars: Sequence[str]) -> "MultiPoly":
        """Re-embed into a variable tuple containing every variable actually used."""
        new_vars = tuple(new_vars)
        n = len(self.vars)
        pos = {}
        for i, v in enumerate(self.vars):
            if v in new_vars:
                pos[i] = new_vars.index(v)
        t = {}
        for k, c in self._t.items():
            exps = _unpack(k, n)
            ne = [0] * len(new_vars)
            for i, e in enumerate(exps):
                if e:
                    if i not in pos:
                        raise ValueError(f"variable {self.vars[i]!r} is used but not kept")
                    ne[pos[i]] = e
            t[_pack(ne)] = c
        return MultiPoly._raw(new_vars, t)

    # -- content ----------------------------------------------------------
    def integer_primitive(self) -> Tuple[Fraction, "MultiPoly"]:
        """``(c, p)`` with ``self = c * p``, ``p`` integral with content 1 and positive leading term."""
        if not self._t:
            return Fraction(0), self
        den = 1
        for c in self._t.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        ints = {k: int(c * den) for k, c in self._t.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if ints[max(ints)] < 0:
            g = -g
        return Fraction(g, den), MultiPoly._raw(self.vars, {k: c // g for k, c in ints.items()})

    def max_coeff_bits(self) -> int:
        return max((abs(Fraction(c).numerator).bit_length() for c in self._t.values()), default=0)

    # -- univariate views ---------------------------------------------------
    def univariate(self, var: str = None):
        """Dense ``Fraction`` coefficient list (lowest first) if only ``var`` occurs."""
        fv = self.free_vars()
        if var is None:
            if len(fv) > 1:
                raise ValueError(f"not univariate: {fv}")
            var = fv[0] if fv else self.vars[0]
        elif any(v != var for v in fv):
            raise ValueError(f"not univariate in {var!r}: {fv}")
        return [Fraction(c.constant_value()) for c in self.coeffs(var)]

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar], var: str, vars: Sequence[str] = None) -> "MultiPoly":
        vars = tuple(vars) if vars is not None else (var,)
        s = BITS * (len(vars) - 1 - vars.index(var))
        return cls._raw(vars, {e << s: _norm(Fraction(c)) for e, c in enumerate(coeffs) if c})

    # -- printing -----------------------------------------------------------
    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e)
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def divexact(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact quotient ``a / b``; raises ``ArithmeticError`` if ``b`` does not divide ``a``."""
    a._same(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    if b.is_constant():
        return a * (Fraction(1) / Fraction(b.constant_value()))
    var = b.free_vars()[0]
    A = a.coeffs(var)
    B = b.coeffs(var)
    db = len(B) - 1
    if len(A) - 1 < db:
        raise ArithmeticError("divisor has larger degree than dividend")
    lcb = B[-1]
    Q = [MultiPoly.zero(a.vars)] * (len(A) - db)
    for k in range(len(A) - 1, db - 1, -1):
        if A[k].is_zero():
            continue
        qk = divexact(A[k], lcb)
        Q[k - db] = qk
        for j in range(db + 1):
            if not B[j].is_zero():
                A[k - db + j] = A[k - db + j] - qk * B[j]
    if any(not A[j].is_zero() for j in range(db)):
        raise ArithmeticError("inexact polynomial division")
    return MultiPoly.from_coeffs(Q, var, a.vars)
