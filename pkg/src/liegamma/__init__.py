"""Closed-form Gamma_l building blocks for matrix Lie groups.

``Gamma_l(X) = sum_m X^m / (l + m)!`` generalizes the exponential
(``l = 0``) and the left Jacobian (``l = 1``).  The package evaluates these
blocks in closed form for SO(2), SE(2), SO(3), SE(3), SE_2(3), SGal(3) and
Sim(3), plus their adjoint representations, and checks every formula
against independent series, quadrature and matrix-exponential oracles.
"""

from .blocks import (gamma3_so3, gamma4_so3, gamma_phi_tau, gamma_so2, gamma_so3,
                     gamma_xy_so3, gamma_xytau_so3, left_jacobian_so3, q_matrix, rotation,
                     sim3_m_matrix)
from .calculus import (KinematicState, acceleration_term, body_velocity, gamma_time_derivative,
                       partial_gamma0)
from .checks import COVERAGE, SUITES, CheckReport, CheckResult, run_suite
from .coeffs import CoeffFamily, coeff, coeff_gamma_scalar, coeffs
from .errors import (AdjointGroupNotSupported, BoundExceeded, IndexOutOfRange, LieGammaError,
                     NotImplementedClosedForm, SeriesNotConverged, SingularMatrix,
                     UnknownFamily, UnknownSuite, UnsupportedAlgebra)
from .groups import (GroupElement, adjoint_of, adjoint_se3_monomial, exp_group, gamma_group,
                     jacobian_any, jacobian_by_quadrature, jacobian_se3_monomial,
                     left_jacobian, minimal_poly_residual, random_tangent)
from .identities import (beta_integral, binomial_expand, double_beta_integral, product_direct,
                         product_expand)
from .linalg import (BASE_GROUPS, GroupId, TangentVector, curlywedge, mat_inverse, skew2, skew3,
                     wedge)
from .oracles import BlockTemplate, SeriesSpec, expm_generic, quadrature_lift, series_eval

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
