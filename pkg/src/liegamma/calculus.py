"""Time and parameter derivatives of the building blocks.

For a trajectory ``x(t)`` in the Lie algebra, the derivative of
``Gamma_l(x^)`` is the three-argument block ``Gamma_l(x^, xdot^, x^)``.  At
level 0 this collapses to ``v^ exp(x^)`` with body velocity
``v = J(x) xdot``.  Every routine here has a finite-difference counterpart
in the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import blocks as B
from .groups import adjoint_of, exp_group, gamma_group, jacobian_any
from .linalg import GroupId, TangentVector, curlywedge, wedge
from .oracles import BlockTemplate, SeriesSpec, series_eval


@dataclass(frozen=True)
class KinematicState:
    """A point ``x`` on a trajectory together with its rate ``xdot``."""

    x: TangentVector
    xdot: TangentVector

    def __post_init__(self):
        if self.x.group != self.xdot.group:
            raise ValueError("x and xdot must share a group")

    @property
    def group(self) -> GroupId:
        return self.x.group


def body_velocity(state: KinematicState) -> TangentVector:
    """Generalized body velocity ``v = J(x) xdot``."""
    J = jacobian_any(state.x)
    return state.x.with_coords(J @ state.xdot.coords)


def _level0_derivative(x: TangentVector, xdot: TangentVector, adjoint: bool) -> np.ndarray:
    v = x.with_coords(jacobian_any(x) @ xdot.coords)
    if adjoint:
        return curlywedge(v) @ adjoint_of(x).matrix
    return wedge(v) @ exp_group(x).matrix


def gamma_time_derivative(ell: int, state: KinematicState, adjoint: bool = False) -> np.ndarray:
    """``d/dt Gamma_l(x^) = Gamma_l(x^, xdot^, x^)`` (curlywedge when ``adjoint``).

    Level 0 uses the body-velocity form and SO3 uses the closed Q-type
    kernels.  Elsewhere the block is read off the upper-right corner of
    ``Gamma_l([[X, Y], [0, X]])``: the k-th power of that block-triangular
    matrix carries ``sum_{m+n=k-1} X^m Y X^n`` in its corner, which is
    exactly the double sum defining ``Gamma_l(X, Y, X)``.
    """
    x, xd = state.x, state.xdot
    g = x.group
    if ell == 0:
        return _level0_derivative(x, xd, adjoint)
    if g is GroupId.SO3:
        return B.gamma3_so3(ell, x.phi, xd.phi)
    hat = curlywedge if adjoint else wedge
    X = hat(x)
    n = X.shape[0]
    Z = np.block([[X, hat(xd)], [np.zeros_like(X), X]])
    return series_eval(SeriesSpec(BlockTemplate.X, ell, Z))[:n, n:]


def acceleration_term(state: KinematicState, xddot: TangentVector) -> TangentVector:
    """Body acceleration ``vdot = Gamma_1(x, xdot, x) xdot + J(x) xddot``."""
    G1 = gamma_time_derivative(1, state, adjoint=True)
    J = jacobian_any(state.x)
    return state.x.with_coords(G1 @ state.xdot.coords + J @ xddot.coords)


def partial_gamma0(x: TangentVector, y: TangentVector) -> np.ndarray:
    """Partial derivative of ``J(x) y`` with respect to ``x``.

    Equals ``Gamma_1(x, y, x) - (J(x) y)^curlywedge J(x)`` with all operators
    in the adjoint representation.
    """
    J = jacobian_any(x)
    G1 = gamma_time_derivative(1, KinematicState(x, y), adjoint=True)
    return G1 - curlywedge(x.with_coords(J @ y.coords)) @ J


def gamma_level(ell: int, x: TangentVector, adjoint: bool = False) -> np.ndarray:
    """Shorthand for ``gamma_group`` used by the finite-difference checks."""
    return gamma_group(ell, x, adjoint)


# ---------------------------------------------------------------------------
# Finite differences


def five_point(f: Callable[[float], np.ndarray], h: float = 1e-5) -> np.ndarray:
    """Five-point central difference of ``f`` at 0."""
    return (-np.asarray(f(2 * h)) + 8 * np.asarray(f(h))
            - 8 * np.asarray(f(-h)) + np.asarray(f(-2 * h))) / (12 * h)


def fd_derivative(f: Callable[[float], np.ndarray], h: float = 1e-5) -> tuple:
    """Derivative at 0 with a Richardson-style error estimate.

    Returns ``(d, err)`` where ``d`` uses step ``h`` and ``err`` is the
    max-norm change when the step is halved.
    """
    d1 = five_point(f, h)
    d2 = five_point(f, h / 2)
    return d2, float(np.max(np.abs(d1 - d2)))


def fd_jacobian(f: Callable[[np.ndarray], np.ndarray], x0, h: float = 1e-5) -> np.ndarray:
    """Columnwise five-point Jacobian of a vector (or matrix-valued) map."""
    x0 = np.asarray(x0, dtype=float)
    cols = []
    for i in range(x0.size):
        e = np.zeros_like(x0)
        e[i] = 1.0
        cols.append(five_point(lambda t: f(x0 + t * e), h))
    return np.stack(cols, axis=-1)
