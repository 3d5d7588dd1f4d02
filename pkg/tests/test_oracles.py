import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.linalg import expm

from liegamma.blocks import gamma_so3
from liegamma.errors import SeriesNotConverged
from liegamma.linalg import skew3
from liegamma.oracles import (BlockTemplate, SeriesSpec, expm_generic, gauss_legendre,
                              quadrature_2d, quadrature_lift, series_eval)

T = BlockTemplate


def _gamma_by_expm(ell, A):
    # Gamma_l(A) is the top-right block of exp of the companion matrix
    # [[A, I, 0..], [0, 0, I, ..], ...] with l shift blocks.
    n = A.shape[0]
    big = np.zeros(((ell + 1) * n, (ell + 1) * n))
    big[:n, :n] = A
    for k in range(ell):
        big[k * n:(k + 1) * n, (k + 1) * n:(k + 2) * n] = np.eye(n)
    return expm(big)[:n, ell * n:(ell + 1) * n]


def test_series_examples():
    np.testing.assert_array_equal(series_eval(SeriesSpec(T.X, 0, skew3([0, 0, 0]))), np.eye(3))
    phi = np.array([0, 0, np.pi / 2])
    got = series_eval(SeriesSpec(T.X, 0, skew3(phi)))
    np.testing.assert_allclose(got, gamma_so3(0, phi), atol=1e-13)


@pytest.mark.parametrize("ell", [0, 1, 2, 3])
def test_series_matches_scipy_expm(ell, rng):
    for _ in range(10):
        A = rng.normal(size=(5, 5))
        np.testing.assert_allclose(series_eval(SeriesSpec(T.X, ell, A)), _gamma_by_expm(ell, A),
                                   atol=1e-12)


def test_series_scalar_arguments():
    assert series_eval(SeriesSpec(T.X, 0, 1.0)) == pytest.approx(math.e, abs=1e-15)
    assert series_eval(SeriesSpec(T.XTAU, 0, 0.0, tau=2.0)) == pytest.approx(2.0)


def test_two_argument_templates_reduce_to_one_argument(rng):
    X = skew3(rng.normal(size=3))
    y = rng.normal(size=3)
    for ell in range(3):
        np.testing.assert_allclose(series_eval(SeriesSpec(T.XY, ell, X, y=y)),
                                   series_eval(SeriesSpec(T.X, ell + 1, X)) @ y, atol=1e-14)
        np.testing.assert_allclose(series_eval(SeriesSpec(T.XYTAU, ell, X, y=y, tau=0.3)),
                                   series_eval(SeriesSpec(T.X, ell + 2, X)) @ y * 0.3,
                                   atol=1e-14)


def test_xyz_template_is_frechet_derivative(rng):
    # Gamma_0(X, Y, X) = d/dt exp(X + t Y) at t = 0.
    X, Y = rng.normal(size=(2, 4, 4))
    n = 4
    block = np.block([[X, Y], [np.zeros((n, n)), X]])
    ref = expm(block)[:n, n:]
    got = series_eval(SeriesSpec(T.XYZ, 0, X, y=Y, z=X))
    np.testing.assert_allclose(got, ref, atol=1e-12)


def test_xyztau_template_weights(rng):
    # sixth template with X = Z = 0 keeps only the m = n = 0 term: Y tau / (l+2)!
    Y = rng.normal(size=(3, 3))
    Z = np.zeros((3, 3))
    for ell in range(3):
        got = series_eval(SeriesSpec(T.XYZTAU, ell, Z, y=Y, z=Z, tau=1.5))
        np.testing.assert_allclose(got, Y * 1.5 / math.factorial(ell + 2), atol=1e-16)


def test_series_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec(T.XY, 0, np.eye(2))
    with pytest.raises(ValueError):
        SeriesSpec(T.X, -1, np.eye(2))
    with pytest.raises(ValueError):
        SeriesSpec(T.X, 0, np.eye(2), tol=0.0)
    with pytest.raises(ValueError, match="spectral radius"):
        series_eval(SeriesSpec(T.X, 0, 9.0 * np.eye(2)))
    with pytest.raises(SeriesNotConverged):
        series_eval(SeriesSpec(T.X, 0, 7.5 * np.eye(2), max_terms=8))


def test_gauss_legendre_rule():
    nodes, weights = gauss_legendre()
    assert len(nodes) == 40
    assert np.all((nodes > 0) & (nodes < 1))
    assert np.sum(weights) == pytest.approx(1.0, abs=1e-15)
    for p in range(0, 79, 7):
        assert np.dot(weights, nodes ** p) == pytest.approx(1 / (p + 1), rel=1e-13)


def test_quadrature_lift_examples(rng):
    np.testing.assert_allclose(quadrature_lift(lambda a: np.eye(3), 0), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(quadrature_lift(lambda a: np.eye(3), 2), np.eye(3) / 3, atol=1e-15)
    phi = rng.normal(size=3)
    np.testing.assert_allclose(quadrature_lift(lambda a: gamma_so3(0, a * phi), 0),
                               gamma_so3(1, phi), atol=1e-11)


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_lift_series_commutation(ell, rng):
    for _ in range(5):
        A = rng.normal(size=(4, 4))
        lifted = quadrature_lift(lambda a: series_eval(SeriesSpec(T.X, ell, a * A)), ell)
        np.testing.assert_allclose(lifted, series_eval(SeriesSpec(T.X, ell + 1, A)), atol=1e-10)


def test_quadrature_2d_polynomial():
    assert quadrature_2d(lambda a, b: a * a * b) == pytest.approx(1 / 6, abs=1e-15)


def test_expm_generic_examples():
    np.testing.assert_array_equal(expm_generic(np.zeros((3, 3))), np.eye(3))
    np.testing.assert_allclose(expm_generic(skew3([0, 0, np.pi])), np.diag([-1.0, -1.0, 1.0]),
                               atol=1e-15)


@given(arrays(np.float64, (5, 5), elements=st.floats(-3, 3)))
def test_expm_generic_matches_scipy(A):
    ref = expm(A)
    scale = max(1.0, np.linalg.norm(ref, np.inf))
    assert np.max(np.abs(expm_generic(A) - ref)) <= 1e-12 * scale


def test_expm_generic_matches_series(rng):
    for _ in range(20):
        A = rng.normal(size=(6, 6))
        np.testing.assert_allclose(expm_generic(A), series_eval(SeriesSpec(T.X, 0, A)),
                                   atol=1e-12 * max(1.0, np.linalg.norm(expm(A), np.inf)))
