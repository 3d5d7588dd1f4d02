"""Summary table of group substructures, one row per quantity.

Every row rebuilds its matrix literally from the named SO(2)/SO(3)
ingredients (C, J, N, Q, M, ...) rather than through ``gamma_group``, and
pairs it with an independent oracle: the generic matrix exponential for
group and adjoint rows, and the summed series ``Gamma_1(xi^curlywedge)`` for
Jacobian rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import blocks as B
from .groups import adjoint_se3_monomial, jacobian_by_quadrature, jacobian_se3_monomial
from .linalg import S2, GroupId, TangentVector, curlywedge, skew3, wedge
from .oracles import BlockTemplate, SeriesSpec, expm_generic, series_eval


@dataclass(frozen=True)
class TableRow:
    group: GroupId
    label: str
    quantity: str
    build: Callable[[TangentVector], np.ndarray]
    oracle: Callable[[TangentVector], np.ndarray]
    tolerance: float = 1e-12


def _exp_oracle(xi):
    return expm_generic(wedge(xi))


def _ad_oracle(xi):
    return expm_generic(curlywedge(xi))


def _jac_oracle(xi):
    return series_eval(SeriesSpec(BlockTemplate.X, 1, curlywedge(xi)))


def _blocks(rows):
    return np.block(rows)


Z3 = np.zeros((3, 3))
z3 = np.zeros((3, 1))


def _col(v):
    return np.asarray(v, dtype=float).reshape(-1, 1)


# SO(2) ----------------------------------------------------------------------

def _so2_c(xi):
    return math.cos(xi.phi) * np.eye(2) + math.sin(xi.phi) * S2


def _se2_t(xi):
    return _blocks([[_so2_c(xi), _col(B.gamma_so2(1, xi.phi) @ xi.rho)],
                    [np.zeros((1, 2)), np.ones((1, 1))]])


def _se2_ad(xi):
    return _blocks([[_so2_c(xi), _col(-S2 @ B.gamma_so2(1, xi.phi) @ xi.rho)],
                    [np.zeros((1, 2)), np.ones((1, 1))]])


def _se2_jac(xi):
    return _blocks([[B.gamma_so2(1, xi.phi), _col(-S2 @ B.gamma_so2(2, xi.phi) @ xi.rho)],
                    [np.zeros((1, 2)), np.ones((1, 1))]])


# SO(3) family ---------------------------------------------------------------

def _C(xi):
    return B.gamma_so3(0, xi.phi)


def _J(xi):
    return B.gamma_so3(1, xi.phi)


def _N(xi):
    return B.gamma_so3(2, xi.phi)


def _se3_t(xi):
    return _blocks([[_C(xi), _col(_J(xi) @ xi.rho)], [np.zeros((1, 3)), np.ones((1, 1))]])


def _se3_ad(xi):
    C = _C(xi)
    return _blocks([[C, skew3(_J(xi) @ xi.rho) @ C], [Z3, C]])


def _se3_jac(xi):
    J = _J(xi)
    return _blocks([[J, B.q_matrix(xi.phi, xi.rho)], [Z3, J]])


def _se23_t(xi):
    out = np.eye(5)
    out[:3, :3] = _C(xi)
    out[:3, 3] = _J(xi) @ xi.nu
    out[:3, 4] = _J(xi) @ xi.rho
    return out


def _se23_ad(xi):
    C, J = _C(xi), _J(xi)
    return _blocks([[C, Z3, skew3(J @ xi.rho) @ C],
                    [Z3, C, skew3(J @ xi.nu) @ C],
                    [Z3, Z3, C]])


def _se23_jac(xi):
    J = _J(xi)
    return _blocks([[J, Z3, B.q_matrix(xi.phi, xi.rho)],
                    [Z3, J, B.q_matrix(xi.phi, xi.nu)],
                    [Z3, Z3, J]])


def _sgal3_t(xi):
    out = np.eye(5)
    out[:3, :3] = _C(xi)
    out[:3, 3] = _J(xi) @ xi.nu
    out[:3, 4] = _J(xi) @ xi.rho + _N(xi) @ xi.nu * xi.tau
    out[3, 4] = xi.tau
    return out


def _sgal3_ad(xi):
    C, J, N, tau = _C(xi), _J(xi), _N(xi), xi.tau
    r13 = skew3(J @ xi.rho - (J - N) @ xi.nu * tau) @ C
    zr = np.zeros((1, 3))
    return _blocks([[C, -C * tau, r13, _col(J @ xi.nu)],
                    [Z3, C, skew3(J @ xi.nu) @ C, z3],
                    [Z3, Z3, C, z3],
                    [zr, zr, zr, np.ones((1, 1))]])


def _sgal3_jac(xi):
    J, N = _J(xi), _N(xi)
    zr = np.zeros((1, 3))
    r13 = B.q_matrix(xi.phi, xi.rho) - B.gamma4_so3(1, xi.phi, xi.nu, xi.tau)
    return _blocks([[J, -B.gamma_phi_tau(1, xi.phi, xi.tau), r13, _col(N @ xi.nu)],
                    [Z3, J, B.q_matrix(xi.phi, xi.nu), z3],
                    [Z3, Z3, J, z3],
                    [zr, zr, zr, np.ones((1, 1))]])


def _sim3_t(xi):
    M = B.sim3_m_matrix(xi.phi, xi.lam)
    return _blocks([[_C(xi), _col(M @ xi.rho)],
                    [np.zeros((1, 3)), np.full((1, 1), math.exp(-xi.lam))]])


def _sim3_ad(xi):
    C = _C(xi)
    s = math.exp(xi.lam)
    Mr = B.sim3_m_matrix(xi.phi, xi.lam) @ xi.rho
    return _blocks([[C * s, skew3(Mr) @ C * s, _col(-Mr * s)],
                    [Z3, C, z3],
                    [np.zeros((1, 3)), np.zeros((1, 3)), np.ones((1, 1))]])


ROWS = (
    TableRow(GroupId.SO2, "SO(2)", "C", _so2_c, _exp_oracle),
    TableRow(GroupId.SO2, "Ad(SO(2))", "Ad", lambda xi: np.ones((1, 1)), _ad_oracle),
    TableRow(GroupId.SO2, "SO(2) Jacobian", "J", lambda xi: np.ones((1, 1)), _jac_oracle),
    TableRow(GroupId.SE2, "SE(2)", "T", _se2_t, _exp_oracle),
    TableRow(GroupId.SE2, "Ad(SE(2))", "Ad", _se2_ad, _ad_oracle),
    TableRow(GroupId.SE2, "SE(2) Jacobian", "J", _se2_jac, _jac_oracle),
    TableRow(GroupId.SO3, "SO(3)", "C", _C, _exp_oracle),
    TableRow(GroupId.SO3, "Ad(SO(3))", "Ad", _C, _ad_oracle),
    TableRow(GroupId.SO3, "SO(3) Jacobian", "J", _J, _jac_oracle),
    TableRow(GroupId.SE3, "SE(3)", "T", _se3_t, _exp_oracle),
    TableRow(GroupId.SE3, "Ad(SE(3))", "Ad", _se3_ad, _ad_oracle),
    TableRow(GroupId.SE3, "Ad(SE(3)) monomial", "Ad", adjoint_se3_monomial, _ad_oracle),
    TableRow(GroupId.SE3, "SE(3) Jacobian", "J", _se3_jac, _jac_oracle),
    TableRow(GroupId.SE3, "SE(3) Jacobian monomial", "J", jacobian_se3_monomial, _jac_oracle),
    TableRow(GroupId.SE23, "SE_2(3)", "T", _se23_t, _exp_oracle),
    TableRow(GroupId.SE23, "Ad(SE_2(3))", "Ad", _se23_ad, _ad_oracle),
    TableRow(GroupId.SE23, "SE_2(3) Jacobian", "J", _se23_jac, _jac_oracle),
    TableRow(GroupId.SGal3, "SGal(3)", "T", _sgal3_t, _exp_oracle),
    TableRow(GroupId.SGal3, "Ad(SGal(3))", "Ad", _sgal3_ad, _ad_oracle),
    TableRow(GroupId.SGal3, "SGal(3) Jacobian", "J", _sgal3_jac, _jac_oracle),
    TableRow(GroupId.Sim3, "Sim(3)", "T", _sim3_t, _exp_oracle),
    TableRow(GroupId.Sim3, "Ad(Sim(3))", "Ad", _sim3_ad, _ad_oracle),
    TableRow(GroupId.Sim3, "Sim(3) Jacobian", "J", jacobian_by_quadrature, _jac_oracle, 1e-9),
)


def row_residual(row: TableRow, xi: TangentVector) -> float:
    """Max elementwise difference scaled by ``max(1, |oracle|_inf)``."""
    got = np.atleast_2d(row.build(xi))
    ref = np.atleast_2d(row.oracle(xi))
    scale = max(1.0, float(np.linalg.norm(ref, np.inf)))
    return float(np.max(np.abs(got - ref))) / scale
