"""Extended poses for inertial navigation: SE_2(3) and the Galilean group.

Run with ``python3 demos/inertial_navigation.py``.

An IMU integrates angular rate and specific force into attitude, velocity
and position.  With constant body rates over a step, the increment is the
exponential of one SGal(3) algebra element whose time slot carries the step
length.  This script propagates a short trajectory both ways: by the
closed-form SGal(3) exponential in one shot, and by many small Euler steps.
It also checks that SE_2(3) shares the SO(3) blocks with SE(3).
"""

import numpy as np

from liegamma import (GroupId, TangentVector, adjoint_of, exp_group, gamma_so3, left_jacobian,
                      mat_inverse, wedge)

omega = np.array([0.1, -0.05, 0.3])      # rad/s
accel = np.array([0.2, 0.0, -0.1])        # m/s^2, body frame, gravity removed
dt = 2.0

# One closed-form step.  Coordinates are (rho, nu, phi, tau).
xi = TangentVector.from_parts(GroupId.SGal3, rho=np.zeros(3), nu=accel * dt,
                              phi=omega * dt, tau=dt)
G = exp_group(xi).matrix
C, v, p = G[:3, :3], G[:3, 3], G[:3, 4]

# Reference: dense Euler integration of the same constant-rate motion.
n = 200_000
h = dt / n
Ck, vk, pk = np.eye(3), np.zeros(3), np.zeros(3)
step = gamma_so3(0, omega * h)
for _ in range(n):
    pk = pk + vk * h + 0.5 * (Ck @ accel) * h * h
    vk = vk + (Ck @ accel) * h
    Ck = Ck @ step
print("attitude error vs Euler :", np.max(np.abs(C - Ck)))
print("velocity error vs Euler :", np.max(np.abs(v - vk)))
print("position error vs Euler :", np.max(np.abs(p - pk)))
print("time slot of the element:", G[3, 4])

# The adjoint moves a perturbation from the body frame to the world frame.
Ad = adjoint_of(xi).matrix
d = TangentVector(GroupId.SGal3, np.r_[np.full(9, 1e-3), 0.0])
lhs = wedge(d.with_coords(Ad @ d.coords))
rhs = G @ wedge(d) @ mat_inverse(G)
print("\nAd identity residual    :", np.max(np.abs(lhs - rhs)))

# SE_2(3) is SGal(3) without the time coupling: same rotation and Jacobian blocks.
x23 = TangentVector.from_parts(GroupId.SE23, rho=np.zeros(3), nu=accel * dt, phi=omega * dt)
J23 = left_jacobian(x23)
print("SE_2(3) diagonal blocks equal J(phi):",
      all(np.allclose(J23[3 * k:3 * k + 3, 3 * k:3 * k + 3], gamma_so3(1, omega * dt))
          for k in range(3)))
