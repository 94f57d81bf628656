"""Shared grid numerics: finite-difference stencils, spectral derivatives, quadrature.

Everything here is deterministic and allocation-light.  All differentiation
operators act on uniform grids; quadrature helpers are plain composite rules
sized by the caller.
"""

import numpy as np

# Fourth-order first-derivative stencils, coefficients over 12h.
_CENTRAL5 = np.array([1.0, -8.0, 0.0, 8.0, -1.0])
_FORWARD5 = np.array([-25.0, 48.0, -36.0, 16.0, -3.0])
_SKEWED5 = np.array([-3.0, -10.0, 18.0, -6.0, 1.0])


def fd4_matrix(n, h):
    """Dense first-derivative matrix, 4th order, one-sided rows at each end.

    Interior rows carry the antisymmetric central stencil; the two rows at
    each boundary use one-sided closures and are the reason callers keep an
    interior margin of 2.
    """
    if n < 5:
        raise ValueError("fd4_matrix needs at least 5 points")
    if h <= 0:
        raise ValueError("grid spacing must be positive")
    d = np.zeros((n, n))
    for j in range(2, n - 2):
        d[j, j - 2:j + 3] = _CENTRAL5
    d[0, 0:5] = _FORWARD5
    d[1, 0:5] = _SKEWED5
    # mirror the closures at the top end with flipped sign
    d[n - 1, n - 5:] = -_FORWARD5[::-1]
    d[n - 2, n - 5:] = -_SKEWED5[::-1]
    return d / (12.0 * h)


def fd4_apply(values, h):
    """Apply the fd4_matrix stencil without materializing the matrix."""
    f = np.asarray(values)
    n = f.shape[0]
    if n < 5:
        raise ValueError("fd4_apply needs at least 5 points")
    out = np.empty_like(f, dtype=np.result_type(f.dtype, float))
    out[2:n - 2] = (f[0:n - 4] - 8.0 * f[1:n - 3] + 8.0 * f[3:n - 1] - f[4:n])
    out[0] = _FORWARD5 @ f[0:5]
    out[1] = _SKEWED5 @ f[0:5]
    out[n - 1] = -(_FORWARD5[::-1] @ f[n - 5:])
    out[n - 2] = -(_SKEWED5[::-1] @ f[n - 5:])
    return out / (12.0 * h)


def periodic_derivative_matrix(m):
    """Spectral first-derivative matrix on the m-point uniform periodic grid.

    m must be even; the matrix is exactly antisymmetric and differentiates
    trigonometric polynomials below the Nyquist band exactly (the Nyquist
    sawtooth itself is mapped to zero).
    """
    if m < 2 or m % 2 != 0:
        raise ValueError("periodic derivative matrix requires even m >= 2")
    j = np.arange(m)
    diff = j[:, None] - j[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        d = 0.5 * ((-1.0) ** diff) / np.tan(np.pi * diff / m)
    np.fill_diagonal(d, 0.0)
    return d


def trapezoid_uniform(values, h):
    """Composite trapezoid rule on a uniform grid."""
    v = np.asarray(values)
    if v.shape[0] < 2:
        raise ValueError("need at least two samples")
    return h * (np.sum(v) - 0.5 * (v[0] + v[-1]))


def trapezoid_weights(n, h):
    w = np.full(n, h)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def gauss_legendre(n, a, b):
    """Nodes and weights of the n-point Gauss-Legendre rule on [a, b]."""
    x, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (b - a)
    return 0.5 * (a + b) + half * x, half * w


def midpoint_rule(n, a, b):
    """Open midpoint rule; avoids evaluating the endpoints."""
    h = (b - a) / n
    return a + (np.arange(n) + 0.5) * h, np.full(n, h)
