"""Time derivatives of the building blocks, and Sim(3) by quadrature.

Run with ``python3 demos/derivatives_and_similarity.py``.

Along a straight line x(t) = x + t xdot in the algebra, the derivative of
Gamma_l is a three-argument block.  We compare it with a five-point finite
difference for every group, then look at Sim(3), whose left Jacobian is only
available as an integral of the adjoint.
"""

import math

import numpy as np

from liegamma import (BASE_GROUPS, GroupId, KinematicState, TangentVector, gamma_group,
                      gamma_time_derivative, jacobian_by_quadrature, partial_gamma0,
                      random_tangent, sim3_m_matrix)
from liegamma.calculus import fd_derivative, fd_jacobian
from liegamma.groups import jacobian_any

rng = np.random.default_rng(7)

print("group   level  |closed - finite difference|")
for group in BASE_GROUPS:
    x = random_tangent(group, rng)
    xd = TangentVector(group, rng.normal(size=group.tangent_dim))
    st = KinematicState(x, xd)
    for ell in (0, 1):
        d, _ = fd_derivative(lambda t: gamma_group(ell, x + t * xd, adjoint=True))
        err = np.max(np.abs(gamma_time_derivative(ell, st, adjoint=True) - d))
        print(f"{group.value:7s} {ell:5d}  {err:.2e}")

# The partial derivative of J(x) y with respect to x.
x = random_tangent(GroupId.SGal3, rng)
y = TangentVector(GroupId.SGal3, rng.normal(size=10))
ref = fd_jacobian(lambda c: jacobian_any(x.with_coords(c)) @ y.coords, x.coords)
print("\nSGal(3) partial derivative vs finite differences:",
      f"{np.max(np.abs(partial_gamma0(x, y) - ref)):.2e}")

# Sim(3): the scale lam enters through M(phi, lam); as lam -> 0 it becomes J(phi).
phi = np.array([0.4, 0.9, -0.2])
rho = np.array([1.0, 0.0, 2.0])
for lam in (1.0, 1e-3, 1e-6, 1e-10):
    diff = sim3_m_matrix(phi, lam) @ rho - gamma_group(1, TangentVector(GroupId.SO3, phi)) @ rho
    print(f"lam={lam:7.0e}  |M rho - J rho| = {np.linalg.norm(diff):.2e}")

xs = TangentVector.from_parts(GroupId.Sim3, rho=rho, phi=phi, lam=0.7)
J7 = jacobian_by_quadrature(xs)
print("\nSim(3) Jacobian, scale block (top-left 3x3 includes the factor from lam):")
print(np.array2string(J7[:3, :3], precision=6))
lam_only = jacobian_by_quadrature(TangentVector.from_parts(GroupId.Sim3, lam=0.7))
print("pure scaling gives (e^lam - 1)/lam =", lam_only[0, 0], "vs", math.expm1(0.7) / 0.7)
