import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from liegamma.errors import AdjointGroupNotSupported, SingularMatrix
from liegamma.linalg import (BASE_GROUPS, GroupId, TangentVector, curlywedge, layout_string,
                             mat_inverse, skew2, skew3, wedge)

vec3 = arrays(np.float64, 3, elements=st.floats(-10, 10))


def test_skew3_examples():
    assert np.array_equal(skew3([0, 0, 0]), np.zeros((3, 3)))
    assert np.array_equal(skew3([1, 0, 0]), [[0, 0, 0], [0, 0, -1], [0, 1, 0]])


@given(vec3, vec3)
def test_skew3_is_cross_product(a, b):
    np.testing.assert_allclose(skew3(a) @ b, np.cross(a, b), atol=1e-12)
    np.testing.assert_array_equal(skew3(a).T, -skew3(a))


def test_skew2_examples():
    assert np.array_equal(skew2(0.0), np.zeros((2, 2)))
    assert np.array_equal(skew2(1.0), [[0, -1], [1, 0]])
    np.testing.assert_allclose(skew2(np.pi), [[0, -np.pi], [np.pi, 0]])


def test_group_parse_and_dims():
    assert GroupId.parse("SE(3)") is GroupId.SE3
    assert GroupId.parse("AdSGal3") is GroupId.AdSGal3
    dims = {GroupId.SO2: 1, GroupId.SE2: 3, GroupId.SO3: 3, GroupId.SE3: 6,
            GroupId.SE23: 9, GroupId.SGal3: 10, GroupId.Sim3: 7}
    for g, n in dims.items():
        assert g.tangent_dim == n
    assert GroupId.AdSE3.base is GroupId.SE3
    assert GroupId.SE3.adjoint is GroupId.AdSE3
    assert GroupId.SO3.adjoint is None
    assert layout_string(GroupId.SGal3) == "rho(3), nu(3), phi(3), tau(1)"
    with pytest.raises(ValueError):
        GroupId.parse("se4")


def test_tangent_vector_validation_and_segments():
    with pytest.raises(ValueError, match="rho"):
        TangentVector(GroupId.SE3, np.zeros(5))
    with pytest.raises(ValueError):
        TangentVector(GroupId.SO3, [np.nan, 0, 0])
    xi = TangentVector.from_parts(GroupId.SGal3, rho=[1, 2, 3], nu=[4, 5, 6], tau=7.0)
    np.testing.assert_array_equal(xi.nu, [4, 5, 6])
    assert xi.tau == 7.0
    assert xi.angle == 0.0
    with pytest.raises(ValueError):
        xi.coords[0] = 1.0
    with pytest.raises(AttributeError):
        xi.lam


def test_tangent_vector_arithmetic():
    a = TangentVector(GroupId.SE3, np.arange(6.0))
    b = TangentVector(GroupId.SE3, np.ones(6))
    assert (a + b) == TangentVector(GroupId.SE3, np.arange(6.0) + 1)
    assert (2 * a - a) == a
    with pytest.raises(ValueError):
        a + TangentVector(GroupId.Sim3, np.zeros(7))


def test_wedge_examples():
    assert np.array_equal(wedge(TangentVector.zero(GroupId.SE3)), np.zeros((4, 4)))
    sim = TangentVector.from_parts(GroupId.Sim3, lam=1.0)
    np.testing.assert_array_equal(wedge(sim), np.diag([0, 0, 0, -1.0]))
    rho, nu, phi, tau = np.array([1., 2, 3]), np.array([4., 5, 6]), np.array([.1, .2, .3]), 0.7
    W = wedge(TangentVector.from_parts(GroupId.SGal3, rho=rho, nu=nu, phi=phi, tau=tau))
    np.testing.assert_array_equal(W[:3, 3], nu)
    np.testing.assert_array_equal(W[:3, 4], rho)
    assert W[3, 4] == tau


def test_curlywedge_examples():
    assert np.array_equal(curlywedge(TangentVector.zero(GroupId.SE3)), np.zeros((6, 6)))
    X = curlywedge(TangentVector.from_parts(GroupId.SE3, rho=[1, 0, 0]))
    expected = np.zeros((6, 6))
    expected[:3, 3:] = skew3([1, 0, 0])
    np.testing.assert_array_equal(X, expected)
    X = curlywedge(TangentVector.from_parts(GroupId.Sim3, lam=2.0))
    np.testing.assert_array_equal(X[:3, :3], 2 * np.eye(3))


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_curlywedge_is_adjoint_action_of_wedge(group, rng):
    # [x^, y^] = (x^curlywedge y)^ ties the two layouts together.
    for _ in range(5):
        x = TangentVector(group, rng.normal(size=group.tangent_dim))
        y = TangentVector(group, rng.normal(size=group.tangent_dim))
        X, Y = wedge(x), wedge(y)
        lhs = X @ Y - Y @ X
        if group is GroupId.SO2:
            np.testing.assert_allclose(lhs, 0, atol=1e-14)
            continue
        rhs = wedge(y.with_coords(curlywedge(x) @ y.coords))
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_adjoint_ids_rejected():
    with pytest.raises(AdjointGroupNotSupported):
        wedge(TangentVector(GroupId.AdSE3, np.zeros(6)))


def test_mat_inverse():
    np.testing.assert_array_equal(mat_inverse(np.eye(3)), np.eye(3))
    np.testing.assert_allclose(mat_inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))
    with pytest.raises(SingularMatrix):
        mat_inverse(np.array([[1.0, 2.0], [2.0, 4.0]]))


@given(arrays(np.float64, (4, 4), elements=st.floats(-1, 1)))
def test_mat_inverse_multiplies_back(a):
    A = a + 5 * np.eye(4)
    assert np.max(np.abs(A @ mat_inverse(A) - np.eye(4))) <= 1e-10
