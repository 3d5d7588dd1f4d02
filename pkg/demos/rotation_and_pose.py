"""Rotations and rigid poses: closed forms next to a brute-force exponential.

Run with ``python3 demos/rotation_and_pose.py``.

We start from a rotation vector, build the rotation matrix and its left
Jacobian, then lift both to SE(3).  At each step the closed form is
compared with the generic matrix exponential, and at the end we shrink the
angle towards zero to show that the small-angle branch keeps full accuracy
where the textbook formulas lose digits.
"""

import math

import numpy as np

from liegamma import (GroupId, TangentVector, adjoint_of, curlywedge, exp_group, expm_generic,
                      gamma_so3, left_jacobian, wedge)
from liegamma.coeffs import closed_form, coeff


def show(title, m):
    print(f"\n{title}")
    print(np.array2string(np.asarray(m), precision=6, suppress_small=True))


phi = np.array([0.3, -1.1, 0.8])
C = gamma_so3(0, phi)
J = gamma_so3(1, phi)
show("rotation C(phi)", C)
show("left Jacobian J(phi)", J)

# J maps the rotation vector to itself and relates C(phi) to C(-phi).
print("\n|J phi - phi|          =", np.max(np.abs(J @ phi - phi)))
print("|J - C J(-phi)|        =", np.max(np.abs(J - C @ gamma_so3(1, -phi))))

# Attach a translation and move to SE(3).
rho = np.array([1.0, 2.0, -0.5])
xi = TangentVector.from_parts(GroupId.SE3, rho=rho, phi=phi)
T = exp_group(xi).matrix
show("pose T = exp(xi^)", T)
print("translation equals J rho:", np.allclose(T[:3, 3], J @ rho, atol=1e-15))

for name, closed, oracle in (("exp", T, expm_generic(wedge(xi))),
                             ("Ad", adjoint_of(xi).matrix, expm_generic(curlywedge(xi)))):
    print(f"{name:>4} closed form vs generic expm: {np.max(np.abs(closed - oracle)):.2e}")

J6 = left_jacobian(xi)
print("  J6 block structure: lower-left zero =", np.all(J6[3:, :3] == 0))

# Small angles: (1 - cos phi)/phi^2 written naively loses everything near 0.
print("\nangle     naive (1-cos)/phi^2     library c2       exact 1/2 - phi^2/24")
for t in (1e-2, 1e-4, 1e-6, 1e-8):
    naive = closed_form("c", 2, t)
    print(f"{t:7.0e}   {naive:.16f}   {coeff('c2', t):.16f}   {0.5 - t * t / 24:.16f}")

theta = math.pi - 1e-3
C_pi = gamma_so3(0, [0.0, 0.0, theta])
print("\nnear a half turn, trace(C) + 1 =", np.trace(C_pi) + 1, "(should be tiny and positive)")
