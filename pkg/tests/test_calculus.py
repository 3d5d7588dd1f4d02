import numpy as np
import pytest

from liegamma import blocks as B
from liegamma.calculus import (KinematicState, acceleration_term, body_velocity, fd_derivative,
                               fd_jacobian, five_point, gamma_level, gamma_time_derivative,
                               partial_gamma0)
from liegamma.groups import exp_group, gamma_group, jacobian_any, random_tangent
from liegamma.linalg import BASE_GROUPS, GroupId, TangentVector, curlywedge, skew3, wedge
from liegamma.oracles import BlockTemplate, SeriesSpec, series_eval


def _state(group, rng):
    x = random_tangent(group, rng)
    xd = TangentVector(group, rng.normal(size=group.tangent_dim))
    return KinematicState(x, xd)


def test_five_point_on_polynomial():
    assert five_point(lambda t: t**4 + 3 * t, h=1e-2) == pytest.approx(3.0, abs=1e-12)
    d, err = fd_derivative(lambda t: np.sin(t))
    assert d == pytest.approx(1.0, abs=1e-10) and err < 1e-9


def test_state_group_mismatch():
    with pytest.raises(ValueError):
        KinematicState(TangentVector.zero(GroupId.SE3), TangentVector.zero(GroupId.SE23))


def test_body_velocity_at_origin(rng):
    xd = TangentVector(GroupId.SE3, rng.normal(size=6))
    v = body_velocity(KinematicState(TangentVector.zero(GroupId.SE3), xd))
    np.testing.assert_allclose(v.coords, xd.coords)


def test_so3_body_velocity_against_rotation_rate(rng):
    for _ in range(10):
        st = _state(GroupId.SO3, rng)
        Cdot, _ = fd_derivative(lambda t: B.rotation(st.x.phi + t * st.xdot.phi))
        W = Cdot @ B.rotation(st.x.phi).T
        omega = np.array([W[2, 1], W[0, 2], W[1, 0]])
        np.testing.assert_allclose(omega, body_velocity(st).coords, atol=1e-6)


def test_time_derivative_at_origin(rng):
    xd = TangentVector(GroupId.SE3, rng.normal(size=6))
    st = KinematicState(TangentVector.zero(GroupId.SE3), xd)
    np.testing.assert_allclose(gamma_time_derivative(0, st), wedge(xd), atol=1e-15)
    np.testing.assert_allclose(gamma_time_derivative(1, st), 0.5 * wedge(xd), atol=1e-15)
    np.testing.assert_allclose(gamma_time_derivative(1, st, adjoint=True),
                               0.5 * curlywedge(xd), atol=1e-15)


@pytest.mark.parametrize("group", BASE_GROUPS)
@pytest.mark.parametrize("ell", [0, 1, 2])
def test_time_derivative_matches_finite_differences(group, ell, rng):
    for _ in range(3):
        st = _state(group, rng)
        for adj in (False, True):
            d, err = fd_derivative(lambda t: gamma_group(ell, st.x + t * st.xdot, adj))
            np.testing.assert_allclose(gamma_time_derivative(ell, st, adj), d, atol=1e-6)
            assert err < 1e-6


@pytest.mark.parametrize("group", [GroupId.SE3, GroupId.SGal3, GroupId.Sim3])
def test_time_derivative_matches_double_series(group, rng):
    st = _state(group, rng)
    for adj, hat in ((False, wedge), (True, curlywedge)):
        X = hat(st.x)
        ref = series_eval(SeriesSpec(BlockTemplate.XYZ, 1, X, y=hat(st.xdot), z=X))
        np.testing.assert_allclose(gamma_time_derivative(1, st, adj), ref, atol=1e-12)


def test_acceleration_examples(rng):
    z = TangentVector.zero(GroupId.SE3)
    xdd = TangentVector(GroupId.SE3, rng.normal(size=6))
    np.testing.assert_allclose(acceleration_term(KinematicState(z, z), xdd).coords, xdd.coords)
    xd = TangentVector(GroupId.SE3, rng.normal(size=6))
    # At the origin Gamma_1(0, xdot, 0) = xdot^/2 and xdot^ xdot = 0.
    a = acceleration_term(KinematicState(z, xd), z)
    np.testing.assert_allclose(a.coords, 0.5 * curlywedge(xd) @ xd.coords, atol=1e-15)


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_acceleration_matches_finite_differences(group, rng):
    for _ in range(3):
        st = _state(group, rng)
        xdd = TangentVector(group, rng.normal(size=group.tangent_dim))

        def v_of(t):
            xt = st.x + t * st.xdot + (0.5 * t * t) * xdd
            return body_velocity(KinematicState(xt, st.xdot + t * xdd)).coords
        d, _ = fd_derivative(v_of)
        np.testing.assert_allclose(acceleration_term(st, xdd).coords, d, atol=1e-5)


def test_partial_derivative_at_origin(rng):
    y = TangentVector(GroupId.SE3, rng.normal(size=6))
    np.testing.assert_allclose(partial_gamma0(TangentVector.zero(GroupId.SE3), y),
                               -0.5 * curlywedge(y), atol=1e-15)


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_partial_derivative_matches_fd_jacobian(group, rng):
    x = random_tangent(group, rng)
    y = TangentVector(group, rng.normal(size=group.tangent_dim))
    ref = fd_jacobian(lambda c: jacobian_any(x.with_coords(c)) @ y.coords, x.coords)
    np.testing.assert_allclose(partial_gamma0(x, y), ref, atol=1e-6)


def test_so3_worked_identities(rng):
    for _ in range(10):
        phi, w, rho = rng.normal(size=(3, 3))
        J = B.left_jacobian_so3(phi)
        # d(J rho)/d phi = Q(phi, rho) - (J rho)^ J
        ref = fd_jacobian(lambda p: B.left_jacobian_so3(p) @ rho, phi)
        np.testing.assert_allclose(B.q_matrix(phi, rho) - skew3(J @ rho) @ J, ref, atol=1e-6)
        # d(J phidot)/d phi = Jdot - omega^ J with omega = J phidot
        st = KinematicState(TangentVector(GroupId.SO3, phi), TangentVector(GroupId.SO3, w))
        lhs = gamma_time_derivative(1, st) - skew3(J @ w) @ J
        ref = fd_jacobian(lambda p: B.left_jacobian_so3(p) @ w, phi)
        np.testing.assert_allclose(lhs, ref, atol=1e-6)


def test_gamma_level_alias(rng):
    xi = random_tangent(GroupId.SE23, rng)
    np.testing.assert_array_equal(gamma_level(1, xi, True), gamma_group(1, xi, True))
    np.testing.assert_array_equal(gamma_level(0, xi), exp_group(xi).matrix)
