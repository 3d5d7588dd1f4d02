"""Scalar trigonometric coefficient families with small-angle safe evaluation.

Every family member is a ratio ``P(phi) / (den * phi**k)`` where ``P`` is a
short sum of terms ``a * phi**p * f(phi)`` with ``f`` one of 1, sin, cos.
Above ``SMALL_ANGLE`` the ratio is evaluated as written.  Below it the
numerator is expanded exactly (``fractions.Fraction``), the removable pole
is divided out, and the resulting even power series is summed by Horner's
rule.  Because the expansion is derived from the same numerator, the two
branches agree to rounding at the switch.

Families and index ranges:

* ``c`` 0..2   rotation:        C = c0 I + c1 P + c2 P^2
* ``j`` 0..2   left Jacobian:   J = j0 I + j1 P + j2 P^2
* ``n`` 0..2   second integral: N = n0 I + n1 P + n2 P^2
* ``t`` 0..4   SE3 adjoint as a polynomial in its algebra element
* ``jt`` 0..4  SE3 left Jacobian as a polynomial in its algebra element
* ``m`` 0..2   Sim3 translation block (needs ``lam``)
* ``g12`` 0..2 Galilean (phi, tau) block at level one
* ``g13`` 0..6 Galilean four-argument block at level one

Here ``P = skew3(phi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import IndexOutOfRange, UnknownFamily

SMALL_ANGLE = 1.0
TAYLOR_TERMS = 18

FAMILY_SIZES = {"c": 3, "j": 3, "n": 3, "t": 5, "jt": 5, "m": 3, "g12": 3, "g13": 7}


@dataclass(frozen=True)
class CoeffFamily:
    """A family name plus index, e.g. ``CoeffFamily("t", 3)``."""

    name: str
    index: int

    def __post_init__(self):
        if self.name not in FAMILY_SIZES:
            raise UnknownFamily(f"unknown coefficient family {self.name!r}")
        if not 0 <= self.index < FAMILY_SIZES[self.name]:
            raise IndexOutOfRange(
                f"family {self.name!r} has indices 0..{FAMILY_SIZES[self.name] - 1}, "
                f"got {self.index}")

    @classmethod
    def parse(cls, text: str) -> "CoeffFamily":
        """Parse names such as ``"jt4"`` or ``"g13_6"``."""
        s = text.strip().replace("_", "")
        for name in sorted(FAMILY_SIZES, key=len, reverse=True):
            if s.startswith(name) and s[len(name):].isdigit():
                return cls(name, int(s[len(name):]))
        raise UnknownFamily(f"cannot parse coefficient family {text!r}")


# (terms, den, k): value = sum(a * phi**p * f(phi)) / (den * phi**k)
_ONE, _SIN, _COS = "1", "sin", "cos"
_EXPR = {
    ("c", 1): (((1, 0, _SIN),), 1, 1),
    ("c", 2): (((1, 0, _ONE), (-1, 0, _COS)), 1, 2),
    ("j", 1): (((1, 0, _ONE), (-1, 0, _COS)), 1, 2),
    ("j", 2): (((1, 1, _ONE), (-1, 0, _SIN)), 1, 3),
    ("n", 1): (((1, 1, _ONE), (-1, 0, _SIN)), 1, 3),
    ("n", 2): (((1, 2, _ONE), (2, 0, _COS), (-2, 0, _ONE)), 2, 4),
    ("t", 1): (((3, 0, _SIN), (-1, 1, _COS)), 2, 1),
    ("t", 2): (((4, 0, _ONE), (-1, 1, _SIN), (-4, 0, _COS)), 2, 2),
    ("t", 3): (((1, 0, _SIN), (-1, 1, _COS)), 2, 3),
    ("t", 4): (((2, 0, _ONE), (-1, 1, _SIN), (-2, 0, _COS)), 2, 4),
    ("jt", 1): (((4, 0, _ONE), (-1, 1, _SIN), (-4, 0, _COS)), 2, 2),
    ("jt", 2): (((4, 1, _ONE), (-5, 0, _SIN), (1, 1, _COS)), 2, 3),
    ("jt", 3): (((2, 0, _ONE), (-1, 1, _SIN), (-2, 0, _COS)), 2, 4),
    ("jt", 4): (((2, 1, _ONE), (-3, 0, _SIN), (1, 1, _COS)), 2, 5),
    ("g12", 1): (((1, 0, _SIN), (-1, 1, _COS)), 1, 3),
    ("g12", 2): (((1, 2, _ONE), (-2, 1, _SIN), (-2, 0, _COS), (2, 0, _ONE)), 2, 4),
    ("g13", 1): (((2, 0, _ONE), (-1, 1, _SIN), (-2, 0, _COS)), 1, 4),
    ("g13", 2): (((1, 2, _ONE), (2, 0, _COS), (-2, 0, _ONE)), 2, 4),
    ("g13", 3): (((1, 3, _ONE), (6, 1, _ONE), (6, 1, _COS), (-12, 0, _SIN)), 6, 5),
    ("g13", 4): (((12, 0, _SIN), (-12, 1, _COS), (-3, 2, _SIN), (-1, 3, _ONE)), 6, 5),
    ("g13", 5): (((1, 3, _ONE), (-6, 1, _ONE), (6, 0, _SIN)), 6, 5),
    ("g13", 6): (((4, 0, _ONE), (1, 2, _ONE), (1, 2, _COS), (-4, 1, _SIN), (-4, 0, _COS)),
                 4, 6),
}
_CONST = {
    ("c", 0): 1.0, ("j", 0): 1.0, ("n", 0): 0.5, ("t", 0): 1.0, ("jt", 0): 1.0,
    ("g12", 0): 0.5, ("g13", 0): 1.0 / 6.0,
}


def _basis_series(kind: str, degree: int) -> list:
    """Exact Maclaurin coefficients of 1, sin or cos up to ``degree``."""
    out = [Fraction(0)] * (degree + 1)
    if kind == _ONE:
        out[0] = Fraction(1)
    for d in range(degree + 1):
        if kind == _SIN and d % 2 == 1:
            out[d] = Fraction((-1) ** (d // 2), math.factorial(d))
        elif kind == _COS and d % 2 == 0:
            out[d] = Fraction((-1) ** (d // 2), math.factorial(d))
    return out


@lru_cache(maxsize=None)
def taylor_coefficients(name: str, index: int, nterms: int = TAYLOR_TERMS) -> tuple:
    """Exact coefficients ``a_i`` with ``coeff = sum a_i phi**(2 i)``.

    Raises ``ArithmeticError`` if the numerator does not vanish to the order
    of the denominator, which would mean a mistranscribed closed form.
    """
    if (name, index) in _CONST:
        return (Fraction(_CONST[(name, index)]).limit_denominator(),) + (Fraction(0),) * (nterms - 1)
    terms, den, k = _EXPR[(name, index)]
    degree = k + 2 * nterms
    num = [Fraction(0)] * (degree + 1)
    for a, p, kind in terms:
        basis = _basis_series(kind, degree)
        for d in range(degree + 1 - p):
            num[d + p] += a * basis[d]
    if any(num[:k]):
        raise ArithmeticError(f"{name}{index}: numerator has a non-removable pole")
    series = num[k:]
    if any(series[1::2]):
        raise ArithmeticError(f"{name}{index}: expansion is not even in phi")
    return tuple(c / den for c in series[0::2][:nterms])


@lru_cache(maxsize=None)
def _taylor_floats(name: str, index: int) -> tuple:
    return tuple(float(c) for c in taylor_coefficients(name, index))


def _horner_even(coefs, phi: float) -> float:
    x = phi * phi
    acc = 0.0
    for c in reversed(coefs):
        acc = acc * x + c
    return acc


def _closed(name: str, index: int, phi: float) -> float:
    terms, den, k = _EXPR[(name, index)]
    s, c = math.sin(phi), math.cos(phi)
    basis = {_ONE: 1.0, _SIN: s, _COS: c}
    total = sum(a * phi ** p * basis[kind] for a, p, kind in terms)
    return total / (den * phi ** k)


def closed_form(name: str, index: int, phi: float) -> float:
    """The coefficient evaluated exactly as written, without small-angle care."""
    if (name, index) in _CONST:
        return _CONST[(name, index)]
    return _closed(name, index, phi)


def taylor_form(name: str, index: int, phi: float) -> float:
    """The coefficient evaluated from its exact power series."""
    return _horner_even(_taylor_floats(name, index), phi)


def _trig_coeff(name: str, index: int, phi: float) -> float:
    if (name, index) in _CONST:
        return _CONST[(name, index)]
    if phi < SMALL_ANGLE:
        return taylor_form(name, index, phi)
    return _closed(name, index, phi)


def _as_family(family, index=None) -> CoeffFamily:
    if isinstance(family, CoeffFamily):
        return family
    if index is None:
        return CoeffFamily.parse(family)
    return CoeffFamily(family, int(index))


def coeff(family, phi: float, lam: float | None = None) -> float:
    """Evaluate one scalar coefficient.

    ``family`` is a ``CoeffFamily``, a ``(name, index)`` pair, or a string
    such as ``"jt3"``.  ``lam`` must be given exactly when the family is
    ``m``.

    >>> round(coeff("t1", math.pi), 12)
    0.5
    """
    fam = _as_family(*family) if isinstance(family, tuple) else _as_family(family)
    phi = float(phi)
    if not phi >= 0.0:
        raise ValueError(f"phi must be non-negative, got {phi}")
    if fam.name == "m":
        if lam is None:
            raise ValueError("family 'm' requires lam")
        return sim3_coeff(fam.index, phi, float(lam))
    if lam is not None:
        raise ValueError(f"family {fam.name!r} takes no lam argument")
    return _trig_coeff(fam.name, fam.index, phi)


def coeffs(name: str, phi: float, lam: float | None = None) -> tuple:
    """All members of a family at once, as a tuple."""
    if name not in FAMILY_SIZES:
        raise UnknownFamily(f"unknown coefficient family {name!r}")
    if name == "m":
        return tuple(sim3_coeff(i, float(phi), float(lam)) for i in range(3))
    return tuple(_trig_coeff(name, i, float(phi)) for i in range(FAMILY_SIZES[name]))


def so3_triple(name: str, phi: float) -> tuple:
    """Fast path for the c, j, n families: returns ``(x0, x1, x2)``."""
    return (_CONST[(name, 0)], _trig_coeff(name, 1, phi), _trig_coeff(name, 2, phi))


# ---------------------------------------------------------------------------
# Scalar series gamma_l(x) = sum_m x**m / (l + m)!

def coeff_gamma_scalar(ell: int, x: float) -> float:
    """Entire scalar series ``sum_m x**m / (ell + m)!``.

    For ``x >= -2`` the series is summed directly.  For more negative ``x``
    the integral representation is re-expanded around the far endpoint,
    which gives ``exp(x) * sum_k (-x)**k / (k! (ell-1)! (ell+k))``, a series
    of positive terms that avoids cancellation.
    """
    ell = int(ell)
    if ell < 0:
        raise ValueError("ell must be non-negative")
    x = float(x)
    if ell == 0:
        return math.exp(x)
    if x >= -2.0:
        term = 1.0 / math.factorial(ell)
        total = term
        m = 0
        while True:
            m += 1
            term *= x / (ell + m)
            total += term
            if abs(term) <= 1e-17 * abs(total) or m > 2000:
                return total
    if x < -745.0:
        return _gamma_tail_asymptotic(ell, x)
    y = -x
    term = 1.0  # y**k / k!
    total = 1.0 / ell
    k = 0
    while True:
        k += 1
        term *= y / k
        add = term / (ell + k)
        total += add
        if add <= 1e-17 * total and k > y:
            break
    return math.exp(x) * total / math.factorial(ell - 1)


def _gamma_tail_asymptotic(ell: int, x: float) -> float:
    # For very negative x the exp(x) part underflows; the remaining part of
    # the closed form sum_{k<ell} ... is the Laurent tail of the series.
    # gamma_l(x) = (exp(x) - sum_{m<l} x**m/m!) / x**l, and exp(x) == 0 here.
    partial = sum(x ** m / math.factorial(m) for m in range(ell))
    return -partial / x ** ell


def alt_series(k: int, phi: float) -> float:
    """``sum_j (-1)**j phi**(2j) / (k + 2j)!`` for ``k >= 0``.

    Summed directly for moderate angles and obtained by the stable upward
    recurrence ``f(k+2) = (1/k! - f(k)) / phi**2`` from ``cos`` and ``sin``
    once ``phi`` dominates ``k``.
    """
    if phi < k + 3:
        x = phi * phi
        term = 1.0 / math.factorial(k)
        total = term
        j = 0
        while True:
            j += 1
            term *= -x / ((k + 2 * j - 1) * (k + 2 * j))
            total += term
            if abs(term) <= 1e-17 * abs(total) or j > 500:
                return total
    x = phi * phi
    f = [math.cos(phi), math.sin(phi) / phi]
    for i in range(2, k + 1):
        f.append((1.0 / math.factorial(i - 2) - f[i - 2]) / x)
    return f[k]


# ---------------------------------------------------------------------------
# Sim(3) translation coefficients m0, m1, m2

SIM3_RECURRENCE_LAM = 4.0
_SIM3_TERMS = 12
_INV_FACT = tuple(1.0 / math.factorial(k) for k in range(64))


def _sim3_small_angle(index: int, phi: float, lam: float) -> float:
    # Same sum as the generic small-angle branch, but the gamma_k(-lam) values
    # come from the downward recurrence gamma_k = 1/k! + x gamma_{k+1}, which
    # is stable while |lam| stays small next to k.
    x = -lam
    top = index + 1 + 2 * _SIM3_TERMS
    g = [0.0] * (top + 1)
    g[top] = coeff_gamma_scalar(top, x)
    for k in range(top - 1, index, -1):
        g[k] = _INV_FACT[k] + x * g[k + 1]
    s = phi * phi
    total = 0.0
    p = 1.0
    for j in range(_SIM3_TERMS + 1):
        total += p * g[2 * j + index + 1]
        p *= -s
    return total


def sim3_coeff(index: int, phi: float, lam: float) -> float:
    """Coefficients of ``M = m0 I + m1 P + m2 P^2`` in the Sim3 translation block."""
    if index == 0:
        if lam == 0.0:
            return 1.0
        return -math.expm1(-lam) / lam
    if index not in (1, 2):
        raise IndexOutOfRange(f"family 'm' has indices 0..2, got {index}")
    if phi < SMALL_ANGLE and abs(lam) <= SIM3_RECURRENCE_LAM:
        return _sim3_small_angle(index, phi, lam)
    if phi < SMALL_ANGLE:
        # sum_j (-1)**j phi**(2j) gamma_{2j+index+1}(-lam)
        x = phi * phi
        total = 0.0
        sign_pow = 1.0
        for j in range(60):
            term = sign_pow * coeff_gamma_scalar(2 * j + index + 1, -lam)
            total += term
            if abs(term) <= 1e-17 * abs(total):
                break
            sign_pow *= -x
        return total
    s_inv = math.exp(-lam)
    sp, cp = math.sin(phi), math.cos(phi)
    denom = lam * lam + phi * phi
    if index == 1:
        return (phi * s_inv + lam * sp - phi * cp) / (phi * denom)
    m0 = sim3_coeff(0, phi, lam)
    return ((lam - phi * sp - lam * cp) / (phi * phi) + m0) / denom


# ---------------------------------------------------------------------------
# Array versions, used by the quadrature Jacobian to evaluate all nodes at once

def coeff_array(name: str, index: int, phi) -> "np.ndarray":
    """Vectorized ``coeff`` for the trigonometric families."""
    CoeffFamily(name, index)
    phi = np.asarray(phi, dtype=float)
    if (name, index) in _CONST:
        return np.full(phi.shape, _CONST[(name, index)])
    out = _horner_even(_taylor_floats(name, index), phi)
    big = phi >= SMALL_ANGLE
    if np.any(big):
        p = phi[big]
        terms, den, k = _EXPR[(name, index)]
        basis = {_ONE: 1.0, _SIN: np.sin(p), _COS: np.cos(p)}
        total = sum(a * p ** q * basis[kind] for a, q, kind in terms)
        out = np.where(big, 0.0, out)
        out[big] = total / (den * p ** k)
    return out


def sim3_coeff_array(index: int, phi, lam) -> "np.ndarray":
    """Vectorized ``sim3_coeff`` over matching arrays of ``phi`` and ``lam``."""
    phi, lam = np.broadcast_arrays(np.asarray(phi, dtype=float), np.asarray(lam, dtype=float))
    if index == 0:
        safe = np.where(lam == 0.0, 1.0, lam)
        return np.where(lam == 0.0, 1.0, -np.expm1(-safe) / safe)
    if index not in (1, 2):
        raise IndexOutOfRange(f"family 'm' has indices 0..2, got {index}")
    out = np.empty(phi.shape)
    big = phi >= SMALL_ANGLE
    if np.any(big):
        p, lb = phi[big], lam[big]
        denom = lb * lb + p * p
        if index == 1:
            out[big] = (p * np.exp(-lb) + lb * np.sin(p) - p * np.cos(p)) / (p * denom)
        else:
            m0 = sim3_coeff_array(0, p, lb)
            out[big] = ((lb - p * np.sin(p) - lb * np.cos(p)) / (p * p) + m0) / denom
    rec = ~big & (np.abs(lam) <= SIM3_RECURRENCE_LAM)
    if np.any(rec):
        x = -lam[rec]
        top = index + 1 + 2 * _SIM3_TERMS
        # gamma_top(x) by a short series: |x| <= 4 and top >= 26
        g_next = np.zeros_like(x)
        for m in range(24, -1, -1):
            g_next = g_next * x + _INV_FACT[top + m]
        g = {top: g_next}
        for k in range(top - 1, index, -1):
            g[k] = _INV_FACT[k] + x * g[k + 1]
        s = phi[rec] ** 2
        total = np.zeros_like(x)
        for j in range(_SIM3_TERMS, -1, -1):
            total = total * (-s) + g[2 * j + index + 1]
        out[rec] = total
    rest = ~big & ~rec
    for i in zip(*np.nonzero(rest)):
        out[i] = sim3_coeff(index, float(phi[i]), float(lam[i]))
    return out
