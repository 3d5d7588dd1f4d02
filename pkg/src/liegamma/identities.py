"""Exact integrals and SO(3) product expansions used to derive the closed forms.

The beta-type integrals are returned as ``fractions.Fraction`` so that they
can be compared exactly.  Each has two independent evaluations: the
factorial formula and term-by-term integration of the binomially expanded
polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

from .errors import BoundExceeded
from .linalg import skew3

MAX_ORDER = 40


def _check(m: int, n: int):
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if m + n > MAX_ORDER:
        raise BoundExceeded(f"m + n = {m + n} exceeds the cap of {MAX_ORDER}")


def beta_integral(m: int, n: int) -> Fraction:
    """``integral_0^1 a**m (1-a)**n da = m! n! / (m+n+1)!``."""
    _check(m, n)
    return Fraction(factorial(m) * factorial(n), factorial(m + n + 1))


def double_beta_integral(m: int, n: int) -> Fraction:
    """``integral_0^1 a integral_0^1 (ab)**m (1-ab)**n db da``.

    Equal to ``m! n!/(m+n+1)! - (m+1)! n!/(m+n+2)!``.
    """
    _check(m, n)
    return (Fraction(factorial(m) * factorial(n), factorial(m + n + 1))
            - Fraction(factorial(m + 1) * factorial(n), factorial(m + n + 2)))


def beta_integral_polynomial(m: int, n: int) -> Fraction:
    """Same integral as ``beta_integral`` by expanding ``(1-a)**n``."""
    _check(m, n)
    return sum((Fraction((-1) ** k * comb(n, k), m + k + 1) for k in range(n + 1)),
               Fraction(0))


def double_beta_integral_polynomial(m: int, n: int) -> Fraction:
    """Same integral as ``double_beta_integral`` by expanding ``(1-ab)**n``."""
    _check(m, n)
    return sum((Fraction((-1) ** k * comb(n, k), (m + k + 1) * (m + k + 2))
                for k in range(n + 1)), Fraction(0))


def product_expand(a, b, phi, rho) -> np.ndarray:
    """Grouped expansion of ``((a0 + a1 P + a2 P^2) rho)^ (b0 + b1 P + b2 P^2)``.

    ``P = skew3(phi)``.  The right-hand side is written in the eight
    monomials ``R, PR, RP, P^2R, RP^2, PRP`` and ``P^2RP + PRP^2`` with
    ``R = skew3(rho)``.
    """
    a0, a1, a2 = (float(v) for v in a)
    b0, b1, b2 = (float(v) for v in b)
    P = skew3(phi)
    R = skew3(rho)
    P2 = P @ P
    p2 = float(np.dot(phi, phi))
    PRP = P @ R @ P
    return (a0 * b0 * R
            + a1 * b0 * P @ R
            + (a0 * b1 - a1 * b0 + p2 * (a1 * b2 - a2 * b1)) * R @ P
            + a2 * b0 * P2 @ R
            + (a0 * b2 - a1 * b1 + a2 * b0 - p2 * a2 * b2) * R @ P2
            + (a1 * b1 - 2 * a2 * b0 + p2 * a2 * b2) * PRP
            + 0.5 * (a1 * b2 - a2 * b1) * (P2 @ R @ P + P @ R @ P2))


def product_direct(a, b, phi, rho) -> np.ndarray:
    """Left-hand side of ``product_expand`` evaluated by brute force."""
    P = skew3(phi)
    A = a[0] * np.eye(3) + a[1] * P + a[2] * P @ P
    Bm = b[0] * np.eye(3) + b[1] * P + b[2] * P @ P
    return skew3(A @ np.asarray(rho, dtype=float)) @ Bm


def binomial_expand(m: int, phi, rho) -> np.ndarray:
    """``sum_k (-1)**k C(m, k) P^(m-k) R P^k``, which equals ``(P^m rho)^``."""
    if not 0 <= m <= 12:
        raise ValueError("m must lie in 0..12")
    P = skew3(phi)
    R = skew3(rho)
    powers = [np.eye(3)]
    for _ in range(m):
        powers.append(powers[-1] @ P)
    out = np.zeros((3, 3))
    for k in range(m + 1):
        out += (-1) ** k * comb(m, k) * powers[m - k] @ R @ powers[k]
    return out
