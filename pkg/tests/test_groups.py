import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.linalg import expm

from liegamma.errors import AdjointGroupNotSupported, NotImplementedClosedForm, UnsupportedAlgebra
from liegamma.groups import (GroupElement, adjoint_of, adjoint_se3_monomial, exp_group,
                             gamma_group, jacobian_any, jacobian_by_quadrature,
                             jacobian_se3_monomial, left_jacobian, minimal_poly_residual,
                             random_tangent)
from liegamma.linalg import BASE_GROUPS, GroupId, TangentVector, curlywedge, wedge
from liegamma.oracles import BlockTemplate, SeriesSpec, quadrature_lift, series_eval

CLOSED_J = [g for g in BASE_GROUPS if g is not GroupId.Sim3]


def _rel(a, b):
    return np.max(np.abs(a - b)) / max(1.0, np.linalg.norm(b, np.inf))


@st.composite
def tangents(draw, group):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tangent(group, np.random.default_rng(seed))


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_exp_and_adjoint_match_scipy(group, rng):
    for _ in range(30):
        xi = random_tangent(group, rng)
        assert _rel(exp_group(xi).matrix, expm(wedge(xi))) <= 1e-12
        assert _rel(adjoint_of(xi).matrix, expm(curlywedge(xi))) <= 1e-12


@pytest.mark.parametrize("group", BASE_GROUPS)
@pytest.mark.parametrize("ell", [1, 2, 3])
def test_gamma_group_matches_series(group, ell, rng):
    for _ in range(5):
        xi = random_tangent(group, rng)
        for adj, hat in ((False, wedge), (True, curlywedge)):
            ref = series_eval(SeriesSpec(BlockTemplate.X, ell, hat(xi)))
            tol = 1e-12 if ell <= 1 else 1e-9
            assert _rel(gamma_group(ell, xi, adj), ref) <= tol


def test_exp_examples():
    np.testing.assert_array_equal(exp_group(TangentVector.zero(GroupId.SE3)).matrix, np.eye(4))
    T = exp_group(TangentVector.from_parts(GroupId.SGal3, nu=[1, 0, 0], tau=2.0)).matrix
    np.testing.assert_allclose(T[:3, 4], [1, 0, 0], atol=1e-16)
    assert T[3, 4] == 2.0
    T = exp_group(TangentVector.from_parts(GroupId.Sim3, rho=[1, 0, 0], lam=math.log(2))).matrix
    np.testing.assert_allclose(T[:3, 3], [0.5 / math.log(2), 0, 0], atol=1e-15)
    assert T[3, 3] == pytest.approx(0.5, abs=1e-16)


def test_adjoint_examples():
    np.testing.assert_array_equal(adjoint_of(TangentVector.zero(GroupId.SE3)).matrix, np.eye(6))
    A = adjoint_of(TangentVector.from_parts(GroupId.SGal3, tau=3.0)).matrix
    np.testing.assert_allclose(A[:3, 3:6], -3 * np.eye(3), atol=1e-16)
    ad = adjoint_of(TangentVector.from_parts(GroupId.SE3, phi=[0.1, 0.2, 0.3]))
    assert ad.group is GroupId.AdSE3
    ad = adjoint_of(TangentVector(GroupId.SO3, [0.1, 0.2, 0.3]))
    assert ad.group is GroupId.SO3 and ad.adjoint


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_group_element_inverse_and_product(group, rng):
    xi = random_tangent(group, rng)
    T = exp_group(xi)
    np.testing.assert_allclose((T @ T.inverse()).matrix, np.eye(group.dim), atol=1e-12)
    np.testing.assert_allclose(T.inverse().matrix, exp_group(-xi).matrix, atol=1e-12)


def test_group_element_shape_check():
    with pytest.raises(ValueError):
        GroupElement(GroupId.SE3, np.eye(3))
    with pytest.raises(ValueError):
        GroupElement(GroupId.SE3, np.eye(4)) @ GroupElement(GroupId.SO3, np.eye(3))


def test_left_jacobian_examples(rng):
    np.testing.assert_array_equal(left_jacobian(TangentVector.zero(GroupId.SE3)), np.eye(6))
    for phi in rng.uniform(-3, 3, 5):
        assert left_jacobian(TangentVector(GroupId.SO2, [phi])) == pytest.approx(np.eye(1))
    with pytest.raises(NotImplementedClosedForm):
        left_jacobian(TangentVector.zero(GroupId.Sim3))
    with pytest.raises(AdjointGroupNotSupported):
        left_jacobian(TangentVector(GroupId.AdSE3, np.zeros(6)))


@pytest.mark.parametrize("group", CLOSED_J)
def test_left_jacobian_matches_quadrature(group, rng):
    for _ in range(10):
        xi = random_tangent(group, rng)
        np.testing.assert_allclose(left_jacobian(xi), jacobian_by_quadrature(xi), atol=1e-9)


def test_sim3_quadrature_jacobian(rng):
    np.testing.assert_allclose(jacobian_by_quadrature(TangentVector.zero(GroupId.Sim3)),
                               np.eye(7), atol=1e-11)
    lam = 1.7
    J = jacobian_by_quadrature(TangentVector.from_parts(GroupId.Sim3, lam=lam))
    np.testing.assert_allclose(J[:3, :3], math.expm1(lam) / lam * np.eye(3), atol=1e-12)
    for _ in range(10):
        xi = random_tangent(GroupId.Sim3, rng)
        # Node-by-node integral of the closed-form adjoint.
        ref = quadrature_lift(lambda a: adjoint_of(a * xi).matrix, 0)
        np.testing.assert_allclose(jacobian_by_quadrature(xi), ref, atol=1e-13)
        assert jacobian_any(xi) is not None


def test_se3_monomial_forms(rng):
    z = TangentVector.zero(GroupId.SE3)
    np.testing.assert_array_equal(adjoint_se3_monomial(z), np.eye(6))
    np.testing.assert_array_equal(jacobian_se3_monomial(z), np.eye(6))
    for _ in range(20):
        xi = random_tangent(GroupId.SE3, rng)
        assert _rel(adjoint_se3_monomial(xi), adjoint_of(xi).matrix) <= 1e-12
        assert _rel(jacobian_se3_monomial(xi), left_jacobian(xi)) <= 1e-12
    xi = random_tangent(GroupId.SE3, rng)
    np.testing.assert_allclose(quadrature_lift(lambda a: adjoint_se3_monomial(a * xi), 0),
                               jacobian_se3_monomial(xi), atol=1e-9)
    with pytest.raises(ValueError):
        adjoint_se3_monomial(TangentVector.zero(GroupId.SE23))


@given(tangents(GroupId.SO3))
def test_minimal_polynomial_so3(xi):
    assert minimal_poly_residual(GroupId.SO3, xi) <= 1e-12 * max(1.0, xi.angle**3)


@given(tangents(GroupId.SE3))
def test_minimal_polynomials_se3(xi):
    n = np.linalg.norm(xi.coords)
    assert minimal_poly_residual(GroupId.SE3, xi) <= 1e-12 * max(1.0, n**4)
    assert minimal_poly_residual(GroupId.AdSE3, xi) <= 1e-12 * max(1.0, n**5)


def test_minimal_polynomial_edges():
    assert minimal_poly_residual(GroupId.AdSE3, TangentVector.zero(GroupId.SE3)) == 0.0
    with pytest.raises(UnsupportedAlgebra):
        minimal_poly_residual(GroupId.SGal3, TangentVector.zero(GroupId.SGal3))


@given(tangents(GroupId.SGal3), tangents(GroupId.SGal3))
def test_adjoint_conjugation_sgal3(x, y):
    T = exp_group(x).matrix
    lhs = wedge(y.with_coords(adjoint_of(x).matrix @ y.coords))
    np.testing.assert_allclose(lhs, T @ wedge(y) @ np.linalg.inv(T), atol=1e-10)


def test_random_tangent_ranges(rng):
    for group in BASE_GROUPS:
        for _ in range(50):
            xi = random_tangent(group, rng)
            assert 1e-6 <= xi.angle <= np.pi - 1e-3


def test_gamma_group_rejects_bad_level():
    with pytest.raises(ValueError):
        gamma_group(-1, TangentVector.zero(GroupId.SE3))
