"""Complex root extraction with multiplicity clustering.

Two entry points:

* ``roots`` works on a double-precision ``ComplexPoly`` and groups the
  Aberth-Ehrlich approximations into ``RootCluster`` values.
* ``exact_roots`` takes integer coefficients of a squarefree polynomial and
  returns every root to ``dps`` decimal digits with mpmath.  The oracle uses
  this path after exact squarefree decomposition, so it never has to resolve
  multiple roots numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

import mpmath
import numpy as np

LEADING_THRESHOLD = 1e-12


class RootFindingError(RuntimeError):
    pass


class NonConvergence(RootFindingError):
    pass


class IllScaled(RootFindingError):
    pass


@dataclass(frozen=True)
class ComplexPoly:
    """Double-precision coefficients, lowest degree first, max modulus 1."""

    coefficients: tuple

    @classmethod
    def from_exact(cls, coeffs: Sequence) -> "ComplexPoly":
        """Convert exact (int/Fraction) coefficients, normalizing by the largest one exactly."""
        qs = [Fraction(c) for c in coeffs]
        while qs and qs[-1] == 0:
            qs.pop()
        if not qs:
            raise IllScaled("zero polynomial")
        big = max(abs(c) for c in qs)
        scaled = []
        for c in qs:
            r = c / big
            scaled.append(complex(float(r)) if r else 0j)
        if abs(scaled[-1]) < LEADING_THRESHOLD:
            raise IllScaled(f"leading coefficient {abs(scaled[-1]):.3g} below {LEADING_THRESHOLD} after normalization")
        return cls(tuple(scaled))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z):
        acc = 0j
        for a in reversed(self.coefficients):
            acc = acc * z + a
        return acc


@dataclass(frozen=True)
class RootCluster:
    representative: complex
    multiplicity: int
    residual: float


def _initial_guesses(n: int, radius: float, lib=np):
    # offset angle avoids symmetric starting configurations
    ang = [2 * math.pi * k / n + 0.4 for k in range(n)]
    return [radius * complex(math.cos(a), math.sin(a)) for a in ang]


def _root_bound(abs_coeffs: Sequence[float]) -> float:
    """Fujiwara bound on root moduli."""
    n = len(abs_coeffs) - 1
    an = abs_coeffs[-1]
    best = 0.0
    for k in range(n):
        a = abs_coeffs[k] / an
        if a:
            e = 1.0 / (n - k)
            v = a ** e
            if k == 0:
                v = (a / 2) ** e
            best = max(best, v)
    return 2 * best if best else 1.0


def aberth(coeffs: Sequence[complex], max_iter: int = 1000, tol: float = 1e-14) -> np.ndarray:
    """All roots of a polynomial (lowest-first coefficients) by Aberth-Ehrlich."""
    a = np.asarray(coeffs, dtype=complex)
    n = len(a) - 1
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return np.array([-a[0] / a[1]])
    hi = a[::-1]
    dhi = np.polyder(hi)
    R = _root_bound([abs(c) for c in a])
    z = np.array(_initial_guesses(n, R * 0.5 + 1e-3))
    for _ in range(max_iter):
        pz = np.polyval(hi, z)
        dpz = np.polyval(dhi, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            break
    return z


def backward_error(coeffs: Sequence[complex], z: complex) -> float:
    num = 0j
    den = 0.0
    az = abs(z)
    for a in reversed(coeffs):
        num = num * z + a
    for k, a in enumerate(coeffs):
        den += abs(a) * az ** k
    return abs(num) / den if den else abs(num)


def cluster(points: Sequence[complex], radius: float) -> List[List[int]]:
    """Single-linkage groups of indices within ``radius * max(1, |z|)``."""
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            scale = max(1.0, abs(points[i]), abs(points[j]))
            if abs(points[i] - points[j]) <= radius * scale:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: (points[g[0]].real, points[g[0]].imag))


def roots(p: ComplexPoly, cluster_radius: float = 1e-6, residual_tol: float = 1e-8, max_iter: int = 1000) -> List[RootCluster]:
    """All roots of ``p`` grouped into clusters.

    Deterministic for a fixed input and radius.  Raises ``NonConvergence``
    when some approximation still has backward error above ``residual_tol``.
    """
    if p.degree < 1:
        raise ValueError("roots needs degree >= 1")
    if abs(p.coefficients[-1]) < LEADING_THRESHOLD:
        raise IllScaled("leading coefficient too small")
    z = aberth(p.coefficients, max_iter=max_iter)
    errs = [backward_error(p.coefficients, complex(r)) for r in z]
    pts = [complex(r) for r in z]
    out = []
    for grp in cluster(pts, cluster_radius):
        rep = sum(pts[i] for i in grp) / len(grp)
        res = max(errs[i] for i in grp)
        # multiple roots are only accurate to eps^(1/m); judge the cluster by its mean
        res = min(res, backward_error(p.coefficients, rep))
        if res > residual_tol:
            raise NonConvergence(f"root near {rep:.6g} has backward error {res:.3g} > {residual_tol:.3g}")
        out.append(RootCluster(rep, len(grp), res))
    return out


# -- multiprecision path for exact squarefree inputs -----------------------------

def _mp_eval(coeffs, z):
    acc = mpmath.mpc(0)
    dacc = mpmath.mpc(0)
    for a in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + a
    return acc, dacc


def _abs_eval(absa, r):
    acc = mpmath.mpf(0)
    for c in reversed(absa):
        acc = acc * r + c
    return acc


def _double_starts(a):
    """Double-precision Aberth approximations used as starting points, or None."""
    big = max(abs(c) for c in a)
    scaled = [complex(c / big) for c in a]
    if abs(scaled[-1]) == 0:
        return None
    z = aberth(scaled, max_iter=500)
    if not np.all(np.isfinite(z)):
        return None
    # nudge coincident starts apart so the iteration can separate them
    out = []
    for k, r in enumerate(z):
        r = complex(r)
        out.append(mpmath.mpc(r.real, r.imag) * (1 + mpmath.mpf(k + 1) * mpmath.mpf("1e-12")))
    return out


def mp_aberth(coeffs, dps: int = 40, max_iter: int = 1000, distinct: bool = False) -> List[mpmath.mpc]:
    """Aberth-Ehrlich at ``dps`` digits on mpmath coefficients (lowest first).

    With ``distinct=True`` the caller promises a squarefree input and coincident
    approximations are reported as ``NonConvergence``.
    """
    a = list(coeffs)
    while a and a[-1] == 0:
        a.pop()
    n = len(a) - 1
    if n < 1:
        return []
    with mpmath.workdps(dps + 10):
        a = [mpmath.mpmathify(c) for c in a]
        if n == 1:
            return [mpmath.mpc(-a[0] / a[1])]
        z = _double_starts(a)
        if z is None:
            an = abs(a[-1])
            bound = mpmath.mpf(0)
            for k in range(n):
                if a[k]:
                    bound = max(bound, (abs(a[k]) / an) ** (mpmath.mpf(1) / (n - k)))
            radius = bound if bound else mpmath.mpf(1)
            z = [radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4")) for k in range(n)]
        eps = mpmath.mpf(10) ** (-dps)
        floor = mpmath.mpf(10) ** (-(dps + 5))
        absa = [abs(c) for c in a]
        for _ in range(max_iter):
            done = True
            for i in range(n):
                pz, dpz = _mp_eval(a, z[i])
                if pz == 0:
                    continue
                if abs(pz) <= floor * _abs_eval(absa, abs(z[i])):
                    continue  # at the rounding floor: no further progress possible
                ratio = pz / dpz if dpz != 0 else mpmath.mpc(0)
                s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i)
                w = ratio / (1 - ratio * s)
                z[i] = z[i] - w
                if abs(w) > eps * max(1, abs(z[i])):
                    done = False
            if done:
                break
        else:
            if distinct:
                raise NonConvergence(f"Aberth iteration did not converge for degree {n}")
        if distinct:
            for i in range(n):
                for j in range(i + 1, n):
                    if abs(z[i] - z[j]) <= 100 * eps * max(1, abs(z[i])):
                        raise NonConvergence("coincident approximations for a squarefree polynomial")
        return [mpmath.mpc(r) for r in z]


def exact_roots(int_coeffs: Sequence[int], dps: int = 40, max_iter: int = 500) -> List[mpmath.mpc]:
    """Roots of a squarefree integer polynomial (lowest first) to about ``dps`` digits."""
    return mp_aberth([int(c) for c in int_coeffs], dps=dps, max_iter=max_iter, distinct=True)
