"""Group elements, adjoints and left Jacobians assembled from SO(3) kernels.

``gamma_group(ell, xi)`` evaluates ``Gamma_l`` of the algebra element of
``xi`` block by block: rotation-like diagonal blocks are ``Gamma_l(phi^)``,
translation columns are two-argument kernels, and the off-diagonal adjoint
blocks are three- and four-argument kernels.  ``exp_group``, ``adjoint_of``
and ``left_jacobian`` are its levels 0 and 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import blocks as B
from .coeffs import coeff_array, coeff_gamma_scalar, coeffs, sim3_coeff_array
from .errors import NotImplementedClosedForm, UnsupportedAlgebra
from .linalg import S2, GroupId, TangentVector, _require_base, curlywedge, skew3, wedge
from .oracles import gauss_legendre, quadrature_lift


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A matrix tagged with the representation it lives in.

    ``group`` is the adjoint id (e.g. ``AdSE3``) for adjoint matrices of
    groups that have one.  SO2 and SO3 adjoints keep the base id and set
    ``adjoint=True``.
    """

    group: GroupId
    matrix: np.ndarray
    adjoint: bool = False

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        n = self.group.adjoint_dim if self.adjoint else self.group.dim
        if m.shape != (n, n):
            raise ValueError(f"{self.group.value} matrix must be {n}x{n}, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("group element has non-finite entries")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other):
        if isinstance(other, GroupElement):
            return GroupElement(self.group, self.matrix @ other.matrix, self.adjoint)
        return self.matrix @ other

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, np.linalg.inv(self.matrix), self.adjoint)

    def rotation_block(self) -> np.ndarray:
        return self.matrix[:2, :2] if self.group.base in (GroupId.SO2, GroupId.SE2) \
            else self.matrix[:3, :3]


def gamma_group(ell: int, xi: TangentVector, adjoint: bool = False) -> np.ndarray:
    """``Gamma_l(xi^)`` (or of the adjoint algebra element when ``adjoint``)."""
    _require_base(xi)
    if int(ell) != ell or ell < 0:
        raise ValueError(f"ell must be a non-negative integer, got {ell}")
    g = xi.group
    inv_fact = 1.0 / math.factorial(ell)
    if g is GroupId.SO2:
        return np.array([[inv_fact]]) if adjoint else B.gamma_so2(ell, xi.phi)
    if g is GroupId.SO3:
        return B.gamma_so3(ell, xi.phi)
    if g is GroupId.SE2:
        R = B.gamma_so2(ell, xi.phi)
        t = B.gamma_so2(ell + 1, xi.phi) @ xi.rho
        out = np.zeros((3, 3))
        out[:2, :2] = R
        out[:2, 2] = -S2 @ t if adjoint else t
        out[2, 2] = inv_fact
        return out

    phi = xi.phi
    if g is GroupId.Sim3:
        return _sim3(ell, xi, adjoint, inv_fact)

    G = B.gamma_so3(ell, phi)
    if not adjoint:
        out = np.eye(g.dim) * inv_fact
        out[:3, :3] = G
        if g is GroupId.SE3:
            out[:3, 3] = B.gamma_xy_so3(ell, phi, xi.rho)
        elif g is GroupId.SE23:
            out[:3, 3] = B.gamma_xy_so3(ell, phi, xi.nu)
            out[:3, 4] = B.gamma_xy_so3(ell, phi, xi.rho)
        elif g is GroupId.SGal3:
            out[:3, 3] = B.gamma_xy_so3(ell, phi, xi.nu)
            out[:3, 4] = (B.gamma_xy_so3(ell, phi, xi.rho)
                          + B.gamma_xytau_so3(ell, phi, xi.nu, xi.tau))
            out[3, 4] = xi.tau / math.factorial(ell + 1)
        return out

    n = g.tangent_dim
    out = np.zeros((n, n))
    for k in range(n // 3):
        out[3 * k:3 * k + 3, 3 * k:3 * k + 3] = G
    if g is GroupId.SE3:
        out[:3, 3:] = B.gamma3_so3(ell, phi, xi.rho)
    elif g is GroupId.SE23:
        out[:3, 6:] = B.gamma3_so3(ell, phi, xi.rho)
        out[3:6, 6:] = B.gamma3_so3(ell, phi, xi.nu)
    elif g is GroupId.SGal3:
        out[:3, 3:6] = -B.gamma_phi_tau(ell, phi, xi.tau)
        out[:3, 6:9] = B.gamma3_so3(ell, phi, xi.rho) - B.gamma4_so3(ell, phi, xi.nu, xi.tau)
        out[:3, 9] = B.gamma_xy_so3(ell, phi, xi.nu)
        out[3:6, 6:9] = B.gamma3_so3(ell, phi, xi.nu)
        out[9, 9] = inv_fact
    return out


def _sim3(ell, xi, adjoint, inv_fact):
    phi, rho, lam = xi.phi, xi.rho, xi.lam
    if ell >= 1:
        # Off-diagonal blocks by one weighted quadrature; diagonal blocks closed.
        out = _sim3_quadrature(ell, xi, adjoint)
        if adjoint:
            out[3:6, 3:6] = B.gamma_so3(ell, phi)
            out[6, 6] = inv_fact
        else:
            out[:3, :3] = B.gamma_so3(ell, phi)
            out[3, 3] = coeff_gamma_scalar(ell, -lam)
        return out
    if not adjoint:
        out = np.zeros((4, 4))
        out[:3, :3] = B.gamma_so3(ell, phi)
        out[:3, 3] = B.gamma_sim3_translation(ell, phi, rho, lam)
        out[3, 3] = coeff_gamma_scalar(ell, -lam)
        return out
    out = np.zeros((7, 7))
    out[:3, :3] = B.gamma_scaled_so3(ell, phi, lam)
    out[:3, 3:6] = B.gamma3_scaled_so3(ell, phi, lam, rho)
    out[:3, 6] = -B.gamma_scaled_so3(ell + 1, phi, lam) @ rho
    out[3:6, 3:6] = B.gamma_so3(ell, phi)
    out[6, 6] = inv_fact
    return out


def exp_group(xi: TangentVector) -> GroupElement:
    """Group exponential ``exp(xi^)`` in closed form."""
    return GroupElement(xi.group, gamma_group(0, xi))


def adjoint_of(xi: TangentVector) -> GroupElement:
    """Adjoint matrix ``Ad(exp(xi^)) = exp(xi^curlywedge)`` in closed form."""
    g = xi.group
    m = gamma_group(0, xi, adjoint=True)
    if g.adjoint is not None:
        return GroupElement(g.adjoint, m)
    return GroupElement(g, m, adjoint=True)


def left_jacobian(xi: TangentVector) -> np.ndarray:
    """Left Jacobian ``Gamma_1(xi^curlywedge)`` in closed form.

    Sim3 has no closed form here; use ``jacobian_by_quadrature``.
    """
    _require_base(xi)
    if xi.group is GroupId.Sim3:
        raise NotImplementedClosedForm(
            "no closed-form Sim3 left Jacobian; use jacobian_by_quadrature")
    return gamma_group(1, xi, adjoint=True)


def jacobian_by_quadrature(xi: TangentVector) -> np.ndarray:
    """Left Jacobian as ``integral_0^1 Ad(exp(alpha xi^)) d alpha``.

    Uses the same Gauss-Legendre rule as ``quadrature_lift``.  For Sim3 the
    integrand is a fixed set of matrices weighted by scalar functions of
    alpha, so only those scalars are evaluated at the nodes.
    """
    _require_base(xi)
    if xi.group is GroupId.Sim3:
        return _sim3_quadrature(1, xi, adjoint=True)
    return quadrature_lift(lambda a: adjoint_of(a * xi).matrix, 0)


def _sim3_quadrature(ell: int, xi: TangentVector, adjoint: bool) -> np.ndarray:
    # Gamma_l(X) = integral_0^1 (1-a)^(l-1)/(l-1)! exp(a X) da for l >= 1.
    # exp(a xi^) and Ad(exp(a xi^)) are fixed matrices weighted by scalars:
    # Ca = I + a c1 P + a^2 c2 P^2, va = a m0 rho + a^2 m1 P rho + a^3 m2 P^2 rho,
    # T = [[Ca, va], [0, exp(-a lam)]] and
    # Ad = [[e Ca, (va)^ Ca e, -e va], [0, Ca, 0], [0, 0, 1]] with e = exp(a lam).
    nodes, weights = gauss_legendre()
    weights = weights * (1.0 - nodes) ** (ell - 1) / math.factorial(ell - 1)
    phi, rho, lam = xi.phi, xi.rho, xi.lam
    th = float(np.linalg.norm(phi))
    P = skew3(phi)
    powers = (np.eye(3), P, P @ P)
    u = (rho, P @ rho, P @ (P @ rho))
    a_th, a_lam = nodes * th, nodes * lam
    g = (np.ones_like(nodes), nodes * coeff_array("c", 1, a_th),
         nodes ** 2 * coeff_array("c", 2, a_th))
    f = [nodes ** (k + 1) * sim3_coeff_array(k, a_th, a_lam) for k in range(3)]
    if not adjoint:
        out = np.zeros((4, 4))
        for j in range(3):
            out[:3, :3] += float(np.dot(weights, g[j])) * powers[j]
            out[:3, 3] += float(np.dot(weights, f[j])) * u[j]
        out[3, 3] = float(np.dot(weights, np.exp(-a_lam)))
        return out
    e = np.exp(a_lam)
    out = np.zeros((7, 7))
    for j in range(3):
        out[:3, :3] += float(np.dot(weights, e * g[j])) * powers[j]
        out[3:6, 3:6] += float(np.dot(weights, g[j])) * powers[j]
    for k in range(3):
        out[:3, 6] -= float(np.dot(weights, e * f[k])) * u[k]
        U = skew3(u[k])
        for j in range(3):
            out[:3, 3:6] += float(np.dot(weights, e * f[k] * g[j])) * (U @ powers[j])
    out[6, 6] = 1.0 / math.factorial(ell)
    return out


def jacobian_any(xi: TangentVector) -> np.ndarray:
    """Closed-form left Jacobian where available, quadrature otherwise."""
    if xi.group is GroupId.Sim3:
        return jacobian_by_quadrature(xi)
    return left_jacobian(xi)


def _se3_only(xi):
    if xi.group is not GroupId.SE3:
        raise ValueError(f"expected an SE3 tangent vector, got {xi.group.value}")


def _poly(coefs, X):
    out = np.zeros_like(X)
    power = np.eye(X.shape[0])
    for c in coefs:
        out = out + c * power
        power = power @ X
    return out


def adjoint_se3_monomial(xi: TangentVector) -> np.ndarray:
    """SE3 adjoint as ``sum_i t_i (xi^curlywedge)^i`` for i = 0..4."""
    _se3_only(xi)
    return _poly(coeffs("t", xi.angle), curlywedge(xi))


def jacobian_se3_monomial(xi: TangentVector) -> np.ndarray:
    """SE3 left Jacobian as a degree-4 polynomial in ``xi^curlywedge``."""
    _se3_only(xi)
    return _poly(coeffs("jt", xi.angle), curlywedge(xi))


_MINPOLY = {
    GroupId.SO2: lambda X, p2: X @ X + p2 * np.eye(X.shape[0]),
    GroupId.SO3: lambda X, p2: X @ X @ X + p2 * X,
    GroupId.SE3: lambda X, p2: np.linalg.matrix_power(X, 4) + p2 * X @ X,
    GroupId.AdSE3: lambda X, p2: (np.linalg.matrix_power(X, 5)
                                  + 2.0 * p2 * np.linalg.matrix_power(X, 3) + p2 * p2 * X),
}


def minimal_poly_residual(algebra: GroupId, xi: TangentVector) -> float:
    """Max-norm of the minimal polynomial evaluated at the algebra element.

    Supported algebras: SO2 (X^2 + phi^2 I), SO3 (X^3 + phi^2 X),
    SE3 (X^4 + phi^2 X^2) and AdSE3 (X^5 + 2 phi^2 X^3 + phi^4 X).
    """
    if algebra not in _MINPOLY:
        raise UnsupportedAlgebra(f"no minimal polynomial known for {algebra.value}")
    if xi.group is not algebra.base:
        raise ValueError(f"{algebra.value} needs a {algebra.base.value} tangent vector")
    X = curlywedge(xi) if algebra.is_adjoint else wedge(xi)
    p2 = xi.angle ** 2
    return float(np.max(np.abs(_MINPOLY[algebra](X, p2))))


# ---------------------------------------------------------------------------
# Sampling


def random_tangent(group: GroupId, rng: np.random.Generator,
                   max_angle: float = math.pi - 1e-3, min_angle: float = 1e-6) -> TangentVector:
    """Draw a tangent vector with the package's standard sampling rules.

    The rotation direction is uniform on the sphere (a random sign in the
    plane) with magnitude uniform in ``(min_angle, max_angle)``; ``rho`` and
    ``nu`` are standard normal; ``lam`` and ``tau`` are uniform in (-2, 2).
    """
    group = group.base
    parts = {}
    for name, n in group.layout:
        if name == "phi":
            mag = rng.uniform(min_angle, max_angle)
            if n == 1:
                parts[name] = mag * (1.0 if rng.random() < 0.5 else -1.0)
            else:
                d = rng.normal(size=3)
                parts[name] = mag * d / np.linalg.norm(d)
        elif name in ("lam", "tau"):
            parts[name] = rng.uniform(-2.0, 2.0)
        else:
            parts[name] = rng.normal(size=n)
    return TangentVector.from_parts(group, **parts)


__all__ = [
    "GroupElement", "gamma_group", "exp_group", "adjoint_of", "left_jacobian",
    "jacobian_by_quadrature", "jacobian_any", "adjoint_se3_monomial",
    "jacobian_se3_monomial", "minimal_poly_residual", "random_tangent",
]
