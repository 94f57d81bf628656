"""Uncertainty relations under a fundamental length.

Five strands share this module:

* Gaussian states on the hyperbolic-angle representation: their position and
  momentum spreads by quadrature, the printed closed forms beside them, and
  the deformed lower bound (1/2)|<center>| they must respect.
* The quadratic generalized-uncertainty comparator: its bound curve, the
  minimal resolvable length, and a concrete symmetric operator realization
  whose eigenstates are normalizable but carry infinite kinetic energy.
* The angle / angular-momentum pair on the circle, where the naive bound is
  corrected by a seam term that vanishes for angular-momentum eigenstates.
* Sharp position states on the lattice, where spread times spread reaches
  zero legitimately because the deformed bound itself collapses.
* Phase-space measure weights: flat versus the two deformation-corrected
  densities, integrated against a thermal Gaussian.

Quadrature cutoffs follow the rule mu_max = 2*alpha + 10*sqrt(2*alpha) + 10,
which pushes the sinh^2-weighted Gaussian tail below 1e-16; every quadrature
here re-checks itself by doubling the cutoff.
"""

import math
from dataclasses import dataclass

import numpy as np

from .algebra import FOURIER_LATTICE, CIRCLE_GRID, expectation, mean_and_spread
from .numerics import (fd4_apply, gauss_legendre,
                       periodic_derivative_matrix, trapezoid_uniform)

BOUND_HEISENBERG = "heisenberg"
BOUND_DEFORMED = "deformed"
BOUND_GUP = "gup"
BOUND_ANGLE = "angle_seam"

_BOUND_SLACK = 1e-10


@dataclass(frozen=True)
class UncertaintyReport:
    dx: float
    dp: float
    product: float
    bound: float
    satisfied: bool
    bound_kind: str


def _report(dx, dp, bound, kind):
    product = dx * dp
    return UncertaintyReport(dx, dp, product, bound,
                             product >= bound - _BOUND_SLACK, kind)


@dataclass(frozen=True)
class GaussianSpec:
    """Gaussian profile exp(-mu^2/(4 alpha)) on the hyperbolic angle."""

    alpha: float
    params: object

    def __post_init__(self):
        if self.alpha <= 0.0:
            raise ValueError("alpha must be positive")
        if self.params.epsilon != 1:
            raise ValueError("gaussian states live on the epsilon = +1 algebra")
        if self.params.ell <= 0.0:
            raise ValueError("ell must be positive")


@dataclass(frozen=True)
class GaussianMoments:
    """Quadrature moments with the printed closed forms carried alongside.

    The quadrature values are authoritative; x2_closed agrees with them but
    p2_closed does not (the discrepancy is reported downstream, never
    silently resolved either way).
    """

    x2_quad: float
    p2_quad: float
    x2_closed: float
    p2_closed: float
    dx: float
    dp: float
    product: float
    cosh_mean: float
    x1_quad: float
    p1_quad: float


def gaussian_quadrature_grid(alpha):
    mu_max = 2.0 * alpha + 10.0 * math.sqrt(2.0 * alpha) + 10.0
    h = min(0.02, math.sqrt(alpha) / 8.0)
    n = int(math.ceil(mu_max / h))
    mu = np.linspace(-n * h, n * h, 2 * n + 1)
    return mu, h


def _gaussian_integrals(spec, mu, h):
    alpha, ell = spec.alpha, spec.params.ell
    psi2 = np.exp(-mu ** 2 / (2.0 * alpha)) / math.sqrt(2.0 * math.pi * alpha)
    # d(psi)/d(mu) = -(mu/2alpha) psi, so |psi'|^2 has a closed window form
    x2 = ell ** 2 * float(np.sum(psi2 * (mu / (2.0 * alpha)) ** 2)) * h
    p2 = float(np.sum(psi2 * np.sinh(mu) ** 2)) * h / ell ** 2
    cosh_mean = float(np.sum(psi2 * np.cosh(mu))) * h
    x1 = ell * float(np.sum(psi2 * (-mu / (2.0 * alpha)))) * h
    p1 = float(np.sum(psi2 * np.sinh(mu))) * h / ell
    return x2, p2, cosh_mean, x1, p1


def gaussian_moments(spec):
    """Spreads of the Gaussian family; quadrature against closed forms.

    The cutoff is validated in place: doubling it must not move the slowest
    converging integral (the sinh^2 one) by more than 1e-10 relative.
    """
    if spec.params.r != 1.0:
        raise ValueError("the gaussian moment formulas are stated at r = 1")
    alpha, ell = spec.alpha, spec.params.ell
    mu, h = gaussian_quadrature_grid(alpha)
    x2, p2, cosh_mean, x1, p1 = _gaussian_integrals(spec, mu, h)
    wide = np.linspace(2.0 * mu[0], 2.0 * mu[-1], 2 * mu.size - 1)
    p2_wide = _gaussian_integrals(spec, wide, h)[1]
    if abs(p2_wide - p2) > 1e-10 * max(1.0, abs(p2)):
        raise RuntimeError("quadrature cutoff rule violated for alpha=%g"
                           % alpha)
    x2_closed = ell ** 2 / (4.0 * alpha)
    p2_closed = (2.0 * math.exp(2.0 * alpha) - 1.0) / (4.0 * ell ** 2)
    dx, dp = math.sqrt(x2), math.sqrt(p2)
    return GaussianMoments(x2, p2, x2_closed, p2_closed,
                           dx, dp, dx * dp, cosh_mean, x1, p1)


def gaussian_product_closed(alpha):
    """The printed spread-product formula, kept verbatim for comparison.

    It diverges as alpha -> 0 where the quadrature product tends to 1/2;
    the deviation column downstream carries the difference.
    """
    return (2.0 * math.exp(alpha) - 1.0) / (4.0 * alpha)


def gaussian_bound_report(spec):
    """Deformed uncertainty report for one Gaussian width."""
    mom = gaussian_moments(spec)
    return _report(mom.dx, mom.dp, 0.5 * abs(mom.cosh_mean), BOUND_DEFORMED)


def deformed_bound_check(state, rep):
    """Spread product of a state on a representation against (1/2)|<center>|."""
    if state.basis != rep.basis:
        raise ValueError("state and representation use different bases")
    if state.grid.shape != rep.grid.shape or not np.allclose(
            state.grid, rep.grid, rtol=0.0, atol=1e-12):
        raise ValueError("state and representation use different grids")
    _, dx = mean_and_spread(state, rep.position)
    _, dp = mean_and_spread(state, rep.momentum)
    bound = 0.5 * abs(expectation(state, rep.center))
    return _report(dx, dp, bound, BOUND_DEFORMED)


# ------------------------------------------------------------ GUP comparator

@dataclass(frozen=True)
class GupCurve:
    dp_values: tuple
    bounds: tuple
    min_dx: float
    argmin_dp: float
    sampled_min_dx: float
    sampled_argmin_dp: float


def gup_bound(c_param, dp):
    if dp <= 0.0:
        raise ValueError("momentum spread must be positive")
    return 0.5 / dp + 0.25 * c_param * dp


def gup_curve(c_param, dp_values):
    """Bound curve of the quadratic comparator plus its exact minimum.

    The calculus minimum sqrt(c/2) at dp = sqrt(2/c) rides along with the
    sampled minimum so refinement studies can watch them converge.
    """
    if c_param <= 0.0:
        raise ValueError("the comparator constant must be positive")
    dps = tuple(float(v) for v in dp_values)
    if not dps:
        raise ValueError("need at least one momentum spread")
    bounds = tuple(gup_bound(c_param, v) for v in dps)
    k = int(np.argmin(bounds))
    return GupCurve(dps, bounds,
                    min_dx=math.sqrt(0.5 * c_param),
                    argmin_dp=math.sqrt(2.0 / c_param),
                    sampled_min_dx=bounds[k],
                    sampled_argmin_dp=dps[k])


@dataclass(frozen=True)
class KempfReport:
    """Operator-level diagnostics of the quadratic-commutator realization."""

    commutator_residual: float
    eigen_residual: float
    norm: float
    energy_tail: tuple


def _kempf_x_apply(c_param, p, h, values):
    factor = 1.0 + 0.5 * c_param * p ** 2
    return 1j * factor * fd4_apply(values, h) + 0.5j * c_param * p * values


def kempf_eigenfunction(c_param, a, p):
    """Normalizable position eigenfunction with eigenvalue a.

    Modulus (1 + (c/2)p^2)^{-1/2}; the phase winds as -sqrt(2/c) * a *
    arctan(sqrt(c/2) p), which the realization converts to the real
    eigenvalue a.  At a = 0 the state is real and even.
    """
    g = 1.0 + 0.5 * c_param * p ** 2
    phase = -math.sqrt(2.0 / c_param) * a * np.arctan(
        math.sqrt(0.5 * c_param) * p)
    return np.exp(1j * phase) / np.sqrt(g)


def kempf_operator_check(c_param, a, p_grid=(40.0, 4000),
                         tail_domains=(10.0, 100.0, 1000.0)):
    """Grid diagnostics for the minimal-length operator realization.

    x acts as i(1 + (c/2)p^2) d/dp + i(c/2)p through 4th-order stencils;
    the bracket with p and the eigenvalue equation are checked on interior
    points.  The norm uses the arctangent substitution (exact for this
    profile), and the kinetic moments over growing windows document the
    infinite-energy property.
    """
    if c_param <= 0.0:
        raise ValueError("the comparator constant must be positive")
    half_width, points = p_grid
    if points < 16:
        raise ValueError("grid too coarse for 4th-order stencils")
    if half_width <= 0.0:
        raise ValueError("half_width must be positive")
    p = np.linspace(-half_width, half_width, int(points))
    h = p[1] - p[0]
    sl = slice(2, -2)

    # bracket on a smooth rapidly decaying probe
    probe = np.exp(-p ** 2 / 50.0).astype(np.complex128)
    lhs = _kempf_x_apply(c_param, p, h, p * probe) \
        - p * _kempf_x_apply(c_param, p, h, probe)
    target = 1j * (1.0 + 0.5 * c_param * p ** 2) * probe
    commutator_residual = float(np.max(np.abs((lhs - target)[sl])))

    psi = kempf_eigenfunction(c_param, a, p)
    eigen = _kempf_x_apply(c_param, p, h, psi) - a * psi
    eigen_residual = float(np.max(np.abs(eigen[sl])))

    u, w = gauss_legendre(400, -0.5 * math.pi, 0.5 * math.pi)
    scale = math.sqrt(2.0 / c_param)
    norm = float(np.sum(w * np.ones_like(u))) * scale

    tails = []
    for L in tail_domains:
        x = np.linspace(-float(L), float(L), 40001)
        dens = x ** 2 / (1.0 + 0.5 * c_param * x ** 2)
        tails.append((float(L), trapezoid_uniform(dens, x[1] - x[0])))
    return KempfReport(commutator_residual, eigen_residual, norm,
                       tuple(tails))


def kempf_residual_convergence(c_param, a, half_width=40.0, points=2000):
    """Bracket and eigenvalue residuals at h and h/2; both are 4th order."""
    coarse = kempf_operator_check(c_param, a, (half_width, points))
    fine = kempf_operator_check(c_param, a, (half_width, 2 * points - 1))
    return (coarse.commutator_residual / fine.commutator_residual,
            coarse.eigen_residual / fine.eigen_residual)


# ------------------------------------------------------------- circle states

def angle_bound(state):
    """Angle / angular-momentum uncertainty with the seam correction.

    The bound (1/2)|1 - 2 pi |psi(2 pi)|^2| evaluates the position-space
    wavefunction at the seam via the last grid point; with amplitudes
    normalized under the 1/M weights, 2 pi |psi|^2 is the squared amplitude
    modulus.  Angular-momentum eigenstates have unit modulus everywhere, so
    their bound collapses; a wavepacket vanishing at the seam recovers the
    Heisenberg-like 1/2.
    """
    if state.basis != CIRCLE_GRID:
        raise ValueError("the angle bound applies to circle-grid states")
    m = state.amplitudes.size
    lz = -1j * periodic_derivative_matrix(m).astype(np.complex128)
    phi = np.diag(state.grid.astype(np.complex128))
    _, d_lz = mean_and_spread(state, lz)
    _, d_phi = mean_and_spread(state, phi)
    last = state.amplitudes[-1]
    seam_weight = last.real * last.real + last.imag * last.imag
    bound = float(0.5 * abs(1.0 - seam_weight))
    return _report(d_lz, d_phi, bound, BOUND_ANGLE)


def localized_state_check(n, rep):
    """Sharp lattice state: zero spread, zero product, zero bound.

    All three zeros are exact in floating point: the state is an eigenvector
    of the diagonal position, and the center operator has no diagonal, so
    its expectation cancels structurally rather than numerically.
    """
    if rep.basis != FOURIER_LATTICE:
        raise ValueError("localized checks apply to the lattice realization")
    from .algebra import delta_state
    state = delta_state(rep, n)
    return deformed_bound_check(state, rep)


# ------------------------------------------------------------------ measures

@dataclass(frozen=True)
class MeasureReport:
    z_flat: float
    z_deformed: float
    z_gup: float


def measure_compare(ell, beta, temp_scale):
    """Thermal-Gaussian weights of the three phase-space measures.

    The flat integral is sqrt(2 pi tau); the deformed density divides by
    sqrt(1 + ell^2 p^2), the comparator density by 1 + beta p^2, so the
    ordering flat >= deformed >= gup holds pointwise whenever beta = ell^2.
    """
    if ell < 0.0 or beta < 0.0:
        raise ValueError("ell and beta must be nonnegative")
    if temp_scale <= 0.0:
        raise ValueError("temp_scale must be positive")
    tau = temp_scale
    cutoff = 20.0 * math.sqrt(tau)
    p = np.linspace(-cutoff, cutoff, 8001)
    h = p[1] - p[0]
    weight = np.exp(-p ** 2 / (2.0 * tau))
    z_flat = float(np.sum(weight)) * h
    z_def = float(np.sum(weight / np.sqrt(1.0 + (ell * p) ** 2))) * h
    z_gup = float(np.sum(weight / (1.0 + beta * p ** 2))) * h
    return MeasureReport(z_flat, z_def, z_gup)
