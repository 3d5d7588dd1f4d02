"""SO(3) and SO(2) building-block kernels.

Each kernel is a 3x3 (or 2x2) matrix function of a rotation vector ``phi``
and possibly a second vector ``y`` and a scalar ``tau``:

* ``gamma_so3(l, phi)``            = sum P^m / (l+m)!
* ``gamma_xy_so3(l, phi, y)``      = sum P^m y / (l+m+1)!
* ``gamma3_so3(l, phi, y)``        = sum P^m Y P^n / (l+m+n+1)!
* ``gamma_phi_tau(l, phi, tau)``   = sum (m+1) P^m tau / (l+m+1)!
* ``gamma4_so3(l, phi, y, tau)``   = sum (m+1) P^m Y P^n tau / (l+m+n+2)!

with ``P = skew3(phi)`` and ``Y = skew3(y)``.  The Sim(3) kernels replace
the first argument by ``P + lam I``.  Levels with a known closed form are
evaluated directly; higher levels are obtained by integrating the level
below against ``alpha**(l-1)``.
"""

from __future__ import annotations

import math

import numpy as np

from .coeffs import alt_series, coeffs, sim3_coeff, so3_triple
from .linalg import S2, skew3
from .oracles import quadrature_lift

I3 = np.eye(3)


def _pp(phi):
    phi = np.asarray(phi, dtype=float)
    P = skew3(phi)
    return P, P @ P, math.sqrt(float(phi @ phi))


def _check_ell(ell: int):
    if int(ell) != ell or ell < 0:
        raise ValueError(f"ell must be a non-negative integer, got {ell}")


def gamma_so3(ell: int, phi) -> np.ndarray:
    """``Gamma_l(phi^)``: C for l=0, J for l=1, N for l=2, and so on."""
    _check_ell(ell)
    P, P2, th = _pp(phi)
    if ell <= 2:
        a0, a1, a2 = so3_triple("cjn"[ell], th)
    else:
        a0, a1, a2 = 1.0 / math.factorial(ell), alt_series(ell + 1, th), alt_series(ell + 2, th)
    return a0 * I3 + a1 * P + a2 * P2


def rotation(phi) -> np.ndarray:
    """Rotation matrix ``C(phi)``."""
    return gamma_so3(0, phi)


def left_jacobian_so3(phi) -> np.ndarray:
    """SO(3) left Jacobian ``J(phi)``."""
    return gamma_so3(1, phi)


def gamma_xy_so3(ell: int, phi, y) -> np.ndarray:
    """Two-argument kernel, returned as a 3-vector ``Gamma_{l+1}(phi^) y``."""
    return gamma_so3(ell + 1, phi) @ np.asarray(y, dtype=float)


def gamma_xytau_so3(ell: int, phi, y, tau: float) -> np.ndarray:
    """Two-argument kernel with time scaling: ``Gamma_{l+2}(phi^) y tau``."""
    return gamma_so3(ell + 2, phi) @ np.asarray(y, dtype=float) * float(tau)


def q_matrix(phi, rho) -> np.ndarray:
    """Translation-rotation coupling block of the SE(3) left Jacobian."""
    P, P2, th = _pp(phi)
    R = skew3(rho)
    n1 = so3_triple("n", th)[1]
    n2 = so3_triple("n", th)[2]
    q3 = coeffs("jt", th)[4]
    PRP = P @ R @ P
    return (0.5 * R
            + n1 * (P @ R + R @ P + PRP)
            + n2 * (P2 @ R + R @ P2 - 3.0 * PRP)
            + q3 * (PRP @ P + P @ PRP))


def gamma3_so3(ell: int, phi, y) -> np.ndarray:
    """``Gamma_l(phi^, y^, phi^)``.

    Level 0 is ``(J y)^ C``; level 1 is the Q block; higher levels are
    integrated from the level below.
    """
    _check_ell(ell)
    y = np.asarray(y, dtype=float)
    if ell == 0:
        return skew3(gamma_so3(1, phi) @ y) @ gamma_so3(0, phi)
    if ell == 1:
        return q_matrix(phi, y)
    phi = np.asarray(phi, dtype=float)
    return quadrature_lift(lambda a: a * gamma3_so3(ell - 1, a * phi, y), ell - 1)


def gamma_phi_tau(ell: int, phi, tau: float) -> np.ndarray:
    """``Gamma_l(phi^, tau)``: ``C tau`` at level 0, ``(J - N) tau`` at level 1.

    Levels above one use the exact relation
    ``Gamma_l(x, tau) = (Gamma_l(x) - l Gamma_{l+1}(x)) tau``.
    """
    _check_ell(ell)
    tau = float(tau)
    if ell == 0:
        return gamma_so3(0, phi) * tau
    if ell == 1:
        P, P2, th = _pp(phi)
        g0, g1, g2 = coeffs("g12", th)
        return (g0 * I3 + g1 * P + g2 * P2) * tau
    return (gamma_so3(ell, phi) - ell * gamma_so3(ell + 1, phi)) * tau


def gamma4_so3(ell: int, phi, y, tau: float) -> np.ndarray:
    """``Gamma_l(phi^, y^, phi^, tau)``.

    Level 0 is ``((J - N) y)^ C tau``; level 1 is a seven-term closed form;
    higher levels are integrated from the level below.
    """
    _check_ell(ell)
    y = np.asarray(y, dtype=float)
    tau = float(tau)
    if ell == 0:
        v = (gamma_so3(1, phi) - gamma_so3(2, phi)) @ y
        return skew3(v) @ gamma_so3(0, phi) * tau
    if ell == 1:
        P, P2, th = _pp(phi)
        V = skew3(y)
        g = coeffs("g13", th)
        PVP = P @ V @ P
        out = (g[0] * V + g[1] * P @ V + g[2] * V @ P + g[3] * P2 @ V
               + g[4] * PVP + g[5] * V @ P2 + g[6] * (P @ PVP + PVP @ P))
        return out * tau
    phi = np.asarray(phi, dtype=float)
    return quadrature_lift(lambda a: a * a * gamma4_so3(ell - 1, a * phi, y, tau), ell - 1)


def gamma_so2(ell: int, phi: float) -> np.ndarray:
    """``Gamma_l(phi S)`` for the planar generator ``S``."""
    _check_ell(ell)
    phi = float(phi)
    th = abs(phi)
    if ell == 0:
        a, b = math.cos(phi), math.sin(phi)
    elif ell == 1:
        _, c1, c2 = so3_triple("c", th)
        a, b = c1, phi * c2
    elif ell == 2:
        _, _, c2 = so3_triple("c", th)
        _, _, j2 = so3_triple("j", th)
        a, b = c2, phi * j2
    else:
        a, b = alt_series(ell, th), phi * alt_series(ell + 1, th)
    return a * np.eye(2) + b * S2


# ---------------------------------------------------------------------------
# Sim(3) kernels: first argument phi^ + lam I


def sim3_m_matrix(phi, lam: float) -> np.ndarray:
    """``M(phi, lam) = m0 I + m1 P + m2 P^2``, so the translation is ``M rho``."""
    P, P2, th = _pp(phi)
    lam = float(lam)
    return (sim3_coeff(0, th, lam) * I3 + sim3_coeff(1, th, lam) * P
            + sim3_coeff(2, th, lam) * P2)


def gamma_scaled_so3(ell: int, phi, lam: float) -> np.ndarray:
    """``Gamma_l(phi^ + lam I)``: ``e^lam C`` at level 0, ``e^lam M`` at level 1."""
    _check_ell(ell)
    lam = float(lam)
    if ell == 0:
        return math.exp(lam) * gamma_so3(0, phi)
    if ell == 1:
        return math.exp(lam) * sim3_m_matrix(phi, lam)
    phi = np.asarray(phi, dtype=float)
    return quadrature_lift(lambda a: gamma_scaled_so3(ell - 1, a * phi, a * lam), ell - 1)


def gamma_sim3_translation(ell: int, phi, rho, lam: float) -> np.ndarray:
    """``sum P^m rho (-lam)^n / (l+m+n+1)!`` as a 3-vector; ``M rho`` at level 0."""
    _check_ell(ell)
    rho = np.asarray(rho, dtype=float)
    lam = float(lam)
    if ell == 0:
        return sim3_m_matrix(phi, lam) @ rho
    phi = np.asarray(phi, dtype=float)
    return quadrature_lift(
        lambda a: a * gamma_sim3_translation(ell - 1, a * phi, rho, a * lam), ell - 1)


def gamma3_scaled_so3(ell: int, phi, lam: float, rho) -> np.ndarray:
    """``Gamma_l(phi^ + lam I, rho^, phi^)``; level 0 is ``(M rho)^ C e^lam``."""
    _check_ell(ell)
    rho = np.asarray(rho, dtype=float)
    lam = float(lam)
    if ell == 0:
        return skew3(sim3_m_matrix(phi, lam) @ rho) @ gamma_so3(0, phi) * math.exp(lam)
    phi = np.asarray(phi, dtype=float)
    return quadrature_lift(
        lambda a: a * gamma3_scaled_so3(ell - 1, a * phi, a * lam, rho), ell - 1)
