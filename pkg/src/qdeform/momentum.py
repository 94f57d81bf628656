"""Momentum statistics of sharply localized states.

A position eigenstate of the discrete-position algebra carries the band
momentum variable P = r sin theta with theta uniform on the circle, so P
follows the arcsine law on [-r, r] and its characteristic function is the
Bessel function J0(s*r).  This module evaluates both sides of that statement
independently (power series plus large-argument asymptotics on one side,
circle quadrature on the other), handles the integrable endpoint singularity
of the density by the sine substitution, and computes the density-of-states
product that replaces the uncertainty principle when both spectra are
discrete.

Nothing here pulls in a special-function library on purpose: J0 is the only
transcendental needed and the two in-house routes cross-check each other.
"""

import math
from dataclasses import dataclass

import numpy as np

from .numerics import gauss_legendre

_SERIES_CUTOVER = 12.0
_SERIES_TERMS = 40

# Hankel-expansion coefficients c_m = prod_{j<=m}(2j-1)^2 / (m! 8^m); the
# even ones feed the cosine amplitude, the odd ones the sine amplitude.
_HANKEL_TERMS = 20
_HANKEL_C = np.empty(_HANKEL_TERMS)
_HANKEL_C[0] = 1.0
for _m in range(1, _HANKEL_TERMS):
    _HANKEL_C[_m] = _HANKEL_C[_m - 1] * (2.0 * _m - 1.0) ** 2 / (8.0 * _m)


def _j0_series(z):
    # ascending series in (z/2)^2; term count fixed, tail underflows
    q = 0.25 * z * z
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(1, _SERIES_TERMS):
        term = term * (-q) / (k * k)
        total = total + term
    return total


def _j0_asymptotic(z):
    inv2 = 1.0 / (z * z)
    p = np.zeros_like(z)
    q = np.zeros_like(z)
    sign = 1.0
    for k in range(_HANKEL_TERMS // 2):
        p = p + sign * _HANKEL_C[2 * k] * inv2 ** k
        q = q - sign * (_HANKEL_C[2 * k + 1] / z) * inv2 ** k
        sign = -sign
    chi = z - 0.25 * math.pi
    return np.sqrt(2.0 / (math.pi * z)) * (p * np.cos(chi) - q * np.sin(chi))


def j0_array(z):
    """Vectorized J0 over an array, series below |z| = 12, expansion above."""
    z = np.abs(np.asarray(z, dtype=float))
    out = np.empty_like(z)
    small = z <= _SERIES_CUTOVER
    if np.any(small):
        out[small] = _j0_series(z[small])
    if np.any(~small):
        out[~small] = _j0_asymptotic(z[~small])
    return out


def bessel_j0(z):
    """J0 at a real argument; both branches hold 1e-9 absolute or better."""
    if not np.isfinite(z):
        raise ValueError("bessel_j0 needs a finite argument")
    return float(j0_array(np.array([z]))[0])


def char_fn(s, r):
    """Characteristic function of the localized-state momentum: J0(s*r)."""
    if r <= 0.0:
        raise ValueError("band parameter r must be positive")
    return bessel_j0(s * r)


def char_fn_quadrature(s, r, grid_size=1024):
    """Same characteristic function as a circle average of e^{i s P}.

    This is the expectation of e^{isP} in any sharp position state on the
    periodic realization: the state's amplitudes have unit modulus, so the
    average is independent of which state was picked.
    """
    if r <= 0.0:
        raise ValueError("band parameter r must be positive")
    if grid_size < 8:
        raise ValueError("grid_size too small for the circle average")
    theta = 2.0 * math.pi * np.arange(grid_size) / grid_size
    return float(np.mean(np.cos(s * r * np.sin(theta))))


@dataclass(frozen=True)
class MomentumLaw:
    """Arcsine law of the band momentum on [-r, r]."""

    r: float

    def __post_init__(self):
        if self.r <= 0.0:
            raise ValueError("band parameter r must be positive")

    @property
    def support(self):
        return (-self.r, self.r)


def arcsine_density(p_value, r):
    """Density, distribution function and second moment of the arcsine law.

    The density diverges (integrably) at the band edges; evaluation exactly
    on an edge is refused rather than returning an infinity that would
    poison downstream quadrature.
    """
    if r <= 0.0:
        raise ValueError("band parameter r must be positive")
    second = 0.5 * r * r
    if abs(p_value) == r:
        raise ValueError(
            "density has an integrable singularity at |P| = r; integrate "
            "across the edge instead of evaluating on it")
    if abs(p_value) > r:
        return 0.0, (0.0 if p_value < 0.0 else 1.0), second
    density = 1.0 / (math.pi * math.sqrt(r * r - p_value * p_value))
    cdf = 0.5 + math.asin(p_value / r) / math.pi
    return density, cdf, second


def density_moment(order, r, nodes=200):
    """Moment of the arcsine law by quadrature.

    The substitution P = r sin u absorbs the edge singularity: the integrand
    becomes (r sin u)^order / pi on [-pi/2, pi/2], smooth, so Gauss-Legendre
    converges fast.  Plain quadrature against the density itself is exactly
    what this avoids.
    """
    if order < 0:
        raise ValueError("moment order must be nonnegative")
    if r <= 0.0:
        raise ValueError("band parameter r must be positive")
    u, w = gauss_legendre(nodes, -0.5 * math.pi, 0.5 * math.pi)
    return float(np.sum(w * (r * np.sin(u)) ** order) / math.pi)


def invert_char_fn(p_value, r, s_max=None, steps=10001):
    """Recover the density from the characteristic function numerically.

    Trapezoid integration of (1/pi) cos(sP) J0(sr) up to s_max, plus the
    analytic continuation of the truncated tail: substituting the
    large-argument cosine form of J0 and integrating each branch
    (frequencies r - P and r + P) twice by parts gives a closed tail
    estimate that removes the O(1/sqrt(s_max)) ringing a sharp cutoff
    would leave.
    """
    if r <= 0.0:
        raise ValueError("band parameter r must be positive")
    if abs(p_value) >= r:
        raise ValueError("inversion targets interior points of the band")
    if s_max is None:
        s_max = 50.0 / r
    if s_max * r < 20.0:
        raise ValueError("s_max too small for the tail expansion to hold")
    s = np.linspace(0.0, s_max, steps)
    integrand = np.cos(s * p_value) * j0_array(s * r)
    h = s[1] - s[0]
    head = (np.sum(integrand) - 0.5 * integrand[0] - 0.5 * integrand[-1]) * h
    tail = 0.0
    amp = 0.5 * math.sqrt(2.0 / (math.pi * r))
    for omega in (r - p_value, r + p_value):
        phase = omega * s_max - 0.25 * math.pi
        a0 = 1.0 / math.sqrt(s_max)
        a1 = -0.5 * s_max ** -1.5
        tail += amp * (-a0 * math.sin(phase) / omega
                       - a1 * math.cos(phase) / omega ** 2)
    return (head + tail) / math.pi


@dataclass(frozen=True)
class DosReport:
    """Product of inverse densities of states for the discrete algebra."""

    mu_x_inv: float
    mu_p_inv: float
    product: float
    small_ell_product: float


def dos_product(params):
    """Inverse-density-of-states product for the double-discrete spectra.

    Position levels are spaced by ell.  The momentum measure of a unit
    interval around p = 0 integrates the arcsine law of P = ell*p from
    -ell/2 to ell/2, giving (2/pi) asin(ell/2r); the product of inverses
    tends to pi*r from below as ell -> 0.
    """
    if params.epsilon != -1:
        raise ValueError("the density-of-states product needs epsilon = -1")
    ell, r = params.ell, params.r
    if ell <= 0.0:
        raise ValueError("ell must be positive")
    if ell > 2.0 * r:
        raise ValueError("band too narrow: a unit momentum interval needs "
                         "ell <= 2r")
    mu_p = (2.0 / math.pi) * math.asin(ell / (2.0 * r))
    return DosReport(mu_x_inv=ell,
                     mu_p_inv=1.0 / mu_p,
                     product=ell / mu_p,
                     small_ell_product=math.pi * r)
