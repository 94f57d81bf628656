import numpy as np
import pytest

from qdeform.numerics import (
    fd4_apply,
    fd4_matrix,
    gauss_legendre,
    midpoint_rule,
    periodic_derivative_matrix,
    trapezoid_uniform,
    trapezoid_weights,
)


def test_fd4_exact_on_quartic():
    # the 5-point stencils, one-sided rows included, kill degree <= 4
    x = np.linspace(0.0, 2.0, 41)
    h = x[1] - x[0]
    f = x ** 4 - 2.0 * x ** 3 + x
    want = 4.0 * x ** 3 - 6.0 * x ** 2 + 1.0
    got = fd4_matrix(x.size, h) @ f
    assert np.max(np.abs(got - want)) <= 1e-11


def test_fd4_matrix_and_apply_agree():
    rng = np.random.default_rng(11)
    f = rng.standard_normal(37)
    h = 0.05
    assert np.allclose(fd4_matrix(37, h) @ f, fd4_apply(f, h),
                       rtol=0.0, atol=1e-12)


def test_fd4_fourth_order_convergence():
    def err(n):
        x = np.linspace(0.0, 2.0, n)
        h = x[1] - x[0]
        got = fd4_apply(np.sin(2.0 * x), h)
        return np.max(np.abs(got - 2.0 * np.cos(2.0 * x)))

    ratio = err(101) / err(201)
    assert 13.0 <= ratio <= 19.0


@pytest.mark.parametrize("n,h", [(4, 0.1), (5, 0.0), (5, -1.0)])
def test_fd4_rejects_bad_grid(n, h):
    with pytest.raises(ValueError):
        fd4_matrix(n, h)


def test_periodic_derivative_exact_on_harmonics():
    m = 32
    d = periodic_derivative_matrix(m)
    theta = 2.0 * np.pi * np.arange(m) / m
    for k in (1, 3, 7):
        got = d @ np.sin(k * theta)
        assert np.max(np.abs(got - k * np.cos(k * theta))) <= 1e-12


def test_periodic_derivative_exactly_antisymmetric():
    d = periodic_derivative_matrix(24)
    assert np.max(np.abs(d + d.T)) == 0.0


def test_periodic_derivative_rejects_odd():
    with pytest.raises(ValueError):
        periodic_derivative_matrix(15)


def test_trapezoid_matches_weights():
    rng = np.random.default_rng(3)
    f = rng.standard_normal(51)
    h = 0.02
    assert trapezoid_uniform(f, h) == pytest.approx(
        float(np.sum(trapezoid_weights(51, h) * f)), abs=1e-14)


def test_trapezoid_sine():
    x = np.linspace(0.0, np.pi, 2001)
    val = trapezoid_uniform(np.sin(x), x[1] - x[0])
    assert val == pytest.approx(2.0, abs=1e-6)


def test_gauss_legendre_polynomial_exactness():
    # n nodes integrate degree 2n-1 exactly
    x, w = gauss_legendre(6, 0.0, 1.0)
    for deg in range(12):
        got = float(np.sum(w * x ** deg))
        assert got == pytest.approx(1.0 / (deg + 1), abs=1e-13)


def test_midpoint_rule_gaussian():
    x, w = midpoint_rule(4001, -10.0, 10.0)
    val = float(np.sum(w * np.exp(-0.5 * x ** 2)))
    assert val == pytest.approx(np.sqrt(2.0 * np.pi), abs=1e-9)
