"""Operator representations of a deformed position-momentum algebra.

The algebra carries a length scale ell and a sign epsilon and closes on three
operators: position x, momentum p, and a third operator that replaces the
identity on the right-hand side of the canonical bracket,

    [x, p] = i*center,   [x, center] = i*epsilon*ell^2*p,   [p, center] = 0,

with the Casimir combination center^2 - epsilon*ell^2*p^2 equal to r^2 times
the identity on an irreducible representation labeled by r > 0.  As ell -> 0
the center collapses to r times the identity and the ordinary commutation
relation returns.

Three concrete finite realizations are built here:

* ``fourier_lattice`` (epsilon = -1): position is a diagonal lattice ell*n,
  momentum and center couple nearest neighbors.  The bracket relations hold
  exactly; truncation artifacts live only in the outermost rows.
* ``circle_grid`` (epsilon = -1): functions on a periodic angle grid with the
  normalized measure; momentum and center are diagonal, position is the
  spectral derivative.
* ``hyperbola_grid`` (epsilon = +1): functions on a truncated uniform grid in
  the hyperbolic angle with trapezoid weights; momentum and center are
  diagonal, position is a 4th-order finite-difference derivative whose
  one-sided boundary rows are excluded from all checks by an interior margin.
"""

from dataclasses import dataclass, field

import numpy as np

from .numerics import fd4_matrix, periodic_derivative_matrix, trapezoid_weights

FOURIER_LATTICE = "fourier_lattice"
CIRCLE_GRID = "circle_grid"
HYPERBOLA_GRID = "hyperbola_grid"

RESIDUAL_KEYS = ("xp", "xc", "pc", "casimir", "jacobi")


@dataclass(frozen=True)
class AlgebraParams:
    """Deformation length ell >= 0, sign epsilon, representation label r, mass."""

    ell: float
    epsilon: int
    r: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if self.epsilon not in (-1, 1):
            raise ValueError("epsilon must be -1 or +1")
        if self.ell < 0.0:
            raise ValueError("ell must be nonnegative")
        if self.r <= 0.0:
            raise ValueError("representation label r must be positive")
        if self.mass <= 0.0:
            raise ValueError("mass must be positive")


@dataclass(frozen=True)
class OperatorRep:
    """Finite matrix realization of (position, momentum, center) on a grid."""

    params: AlgebraParams
    basis: str
    position: np.ndarray
    momentum: np.ndarray
    center: np.ndarray
    grid: np.ndarray
    weights: np.ndarray
    interior_margin: int

    def __post_init__(self):
        n = self.position.shape[0]
        if n < 3:
            raise ValueError("representation dimension must be at least 3")
        if self.interior_margin < 2 and self.basis == FOURIER_LATTICE:
            raise ValueError("fourier_lattice reps keep an interior margin >= 2")

    @property
    def dim(self):
        return self.position.shape[0]


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)


def build_fourier_rep(params, n_max):
    """Lattice realization on index n in {-n_max..n_max}, epsilon = -1.

    position = diag(ell*n); momentum and center couple n -> n+-1 with entries
    -+ r/(2i ell) and r/2.  All three bracket relations hold identically on
    this lattice; the finite cut only disturbs the outermost two rows, which
    is why interior_margin = 2.
    """
    if params.epsilon != -1:
        raise ValueError("the lattice realization exists for epsilon = -1 only")
    if params.ell == 0.0:
        raise ValueError("ell must be positive for a deformed representation")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    ell, r = params.ell, params.r
    idx = np.arange(-n_max, n_max + 1)
    dim = idx.size
    x = np.diag(ell * idx.astype(float)).astype(np.complex128)
    p = np.zeros((dim, dim), dtype=np.complex128)
    c = np.zeros((dim, dim), dtype=np.complex128)
    for a in range(dim - 1):
        # p couples like the centered difference over the lattice, c like
        # the centered average; both are Hermitian
        p[a, a + 1] = r / (2j * ell)
        p[a + 1, a] = -r / (2j * ell)
        c[a, a + 1] = 0.5 * r
        c[a + 1, a] = 0.5 * r
    grid = idx.copy()
    weights = np.ones(dim)
    _freeze(x, p, c, grid, weights)
    return OperatorRep(params, FOURIER_LATTICE, x, p, c, grid, weights, 2)


def build_circle_rep(params, m):
    """Periodic-angle realization with the normalized measure, epsilon = -1.

    momentum = diag((r/ell) sin theta), center = diag(r cos theta), position
    is i*ell times the spectral derivative.  Even m keeps the derivative
    matrix antisymmetric; odd grids are rejected.
    """
    if params.epsilon != -1:
        raise ValueError("the periodic realization exists for epsilon = -1 only")
    if params.ell == 0.0:
        raise ValueError("ell must be positive for a deformed representation")
    if m < 8 or m % 2 != 0:
        raise ValueError("m must be even and at least 8")
    ell, r = params.ell, params.r
    theta = 2.0 * np.pi * np.arange(m) / m
    x = (1j * ell) * periodic_derivative_matrix(m).astype(np.complex128)
    p = np.diag((r / ell) * np.sin(theta)).astype(np.complex128)
    c = np.diag(r * np.cos(theta)).astype(np.complex128)
    weights = np.full(m, 1.0 / m)
    _freeze(x, p, c, theta, weights)
    return OperatorRep(params, CIRCLE_GRID, x, p, c, theta, weights, 0)


def build_hyperbola_rep(params, mu_max, m):
    """Hyperbolic-angle realization on [-mu_max, mu_max], epsilon = +1.

    momentum = diag((r/ell) sinh mu), center = diag(r cosh mu), position is
    i*ell times the 4th-order finite-difference derivative.  Trapezoid
    weights; the one-sided boundary rows sit inside interior_margin = 2.
    """
    if params.epsilon != 1:
        raise ValueError("the hyperbolic realization exists for epsilon = +1 only")
    if params.ell == 0.0:
        raise ValueError("ell must be positive for a deformed representation")
    if mu_max <= 0.0:
        raise ValueError("mu_max must be positive")
    if m < 16:
        raise ValueError("m must be at least 16")
    ell, r = params.ell, params.r
    mu = np.linspace(-mu_max, mu_max, m)
    h = mu[1] - mu[0]
    x = (1j * ell) * fd4_matrix(m, h).astype(np.complex128)
    p = np.diag((r / ell) * np.sinh(mu)).astype(np.complex128)
    c = np.diag(r * np.cosh(mu)).astype(np.complex128)
    weights = trapezoid_weights(m, h)
    _freeze(x, p, c, mu, weights)
    return OperatorRep(params, HYPERBOLA_GRID, x, p, c, mu, weights, 2)


def commutator(a, b):
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError("commutator needs two square matrices of equal shape")
    return a @ b - b @ a


def _interior(margin, dim):
    if margin == 0:
        return slice(None)
    if 2 * margin >= dim:
        raise ValueError("interior margin swallows the whole representation")
    return slice(margin, dim - margin)


def default_probe(rep):
    """Smooth unit-norm probe adapted to the basis, used for weak residuals."""
    if rep.basis == FOURIER_LATTICE:
        width = max(rep.grid[-1] / 3.0, 1.0)
        v = np.exp(-((rep.grid / width) ** 2))
    elif rep.basis == CIRCLE_GRID:
        # band-limited on purpose: the spectral derivative is exact on it
        v = 1.0 + np.cos(rep.grid) + 0.5 * np.sin(2.0 * rep.grid)
    else:
        v = np.exp(-0.5 * rep.grid ** 2)
    v = v.astype(np.complex128)
    norm = np.sqrt(np.sum(rep.weights * np.abs(v) ** 2))
    return v / norm


@dataclass(frozen=True)
class ResidualReport:
    """Max-abs bracket residuals: raw entries and action on a smooth probe.

    entry_* are matrix-entry maxima (meaningful where the relations hold
    entrywise, as on the lattice); probe_interior applies each residual to a
    smooth probe state, which is the faithful measure for grid derivatives.
    """

    entry_full: dict = field(default_factory=dict)
    entry_interior: dict = field(default_factory=dict)
    probe_interior: dict = field(default_factory=dict)


def residual_matrices(rep):
    prm = rep.params
    x, p, c = rep.position, rep.momentum, rep.center
    eye = np.eye(rep.dim, dtype=np.complex128)
    r1 = commutator(x, p) - 1j * c
    r2 = commutator(x, c) - 1j * prm.epsilon * prm.ell ** 2 * p
    r3 = commutator(p, c)
    r4 = c @ c - prm.epsilon * prm.ell ** 2 * (p @ p) - prm.r ** 2 * eye
    r5 = (commutator(commutator(x, p), c)
          + commutator(commutator(p, c), x)
          + commutator(commutator(c, x), p))
    return dict(zip(RESIDUAL_KEYS, (r1, r2, r3, r4, r5)))


def algebra_residuals(rep, probe=None):
    """Evaluate all five defining relations on a representation.

    The interior restriction drops interior_margin rows and columns at each
    edge, where lattice truncation or one-sided stencils live by design.
    """
    mats = residual_matrices(rep)
    sl = _interior(rep.interior_margin, rep.dim)
    if probe is None:
        probe = default_probe(rep)
    entry_full = {}
    entry_interior = {}
    probe_interior = {}
    for key, mat in mats.items():
        entry_full[key] = float(np.max(np.abs(mat)))
        entry_interior[key] = float(np.max(np.abs(mat[sl, sl])))
        probe_interior[key] = float(np.max(np.abs((mat @ probe)[sl])))
    return ResidualReport(entry_full, entry_interior, probe_interior)


def commutator_convergence(params, mu_max, m_coarse, probe_fn=None):
    """Probe residual of the position-momentum bracket at h and h/2.

    Builds hyperbolic-angle realizations on the same interval with the grid
    count doubled (m -> 2m-1 halves the spacing exactly) and compares the
    interior probe residuals.  A 4th-order derivative gives a ratio near 16.
    """
    if probe_fn is None:
        probe_fn = lambda mu: np.exp(-0.5 * mu ** 2)

    def one(m):
        rep = build_hyperbola_rep(params, mu_max, m)
        v = probe_fn(rep.grid).astype(np.complex128)
        v = v / np.sqrt(np.sum(rep.weights * np.abs(v) ** 2))
        mats = residual_matrices(rep)
        sl = _interior(rep.interior_margin, rep.dim)
        return float(np.max(np.abs((mats["xp"] @ v)[sl])))

    coarse = one(m_coarse)
    fine = one(2 * m_coarse - 1)
    return coarse, fine, coarse / fine


def hermiticity_defects(rep):
    """Max deviation from self-adjointness under the basis inner product.

    For the hyperbolic grid the position operator is checked on the interior
    block only: its one-sided closure rows cannot be made symmetric and are
    already excluded from every algebra check by the margin.
    """
    w = rep.weights
    out = {}
    for name, mat in (("position", rep.position), ("momentum", rep.momentum),
                      ("center", rep.center)):
        adj = (mat.conj().T * w[None, :]) / w[:, None]
        defect = np.abs(mat - adj)
        if rep.basis == HYPERBOLA_GRID and name == "position":
            sl = _interior(rep.interior_margin, rep.dim)
            out[name] = float(np.max(defect[sl, sl]))
        else:
            out[name] = float(np.max(defect))
    return out


def im_from_p(p, params):
    """Center eigenvalue as a function of momentum: exact and leading order.

    exact = r*sqrt(1 + epsilon*(ell*p/r)^2); the leading form truncates the
    square root after the quadratic term.  For epsilon = -1 the momentum is
    confined to |ell*p| <= r.
    """
    ell, eps, r = params.ell, params.epsilon, params.r
    z = (ell * p / r) ** 2
    if eps == -1 and z > 1.0 + 1e-15:
        raise ValueError("momentum outside the band: |ell*p| must not exceed r")
    exact = r * np.sqrt(max(1.0 + eps * z, 0.0))
    leading = r * (1.0 + 0.5 * eps * z)
    return float(exact), float(leading)


@dataclass(frozen=True)
class GridState:
    """Normalized state over a representation grid."""

    basis: str
    amplitudes: np.ndarray
    grid: np.ndarray
    weights: np.ndarray

    @property
    def norm_squared(self):
        return float(np.sum(self.weights * np.abs(self.amplitudes) ** 2))


def state_from_amplitudes(rep, values):
    v = np.asarray(values, dtype=np.complex128).copy()
    if v.shape[0] != rep.dim:
        raise ValueError("amplitude vector does not match the grid")
    nrm = np.sqrt(np.sum(rep.weights * np.abs(v) ** 2))
    if nrm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    v /= nrm
    _freeze(v)
    return GridState(rep.basis, v, rep.grid, rep.weights)


def delta_state(rep, n):
    """Sharp position state on the lattice: amplitude 1 at index n."""
    if rep.basis != FOURIER_LATTICE:
        raise ValueError("delta states live on the lattice realization")
    n_max = int(rep.grid[-1])
    if abs(n) > n_max - rep.interior_margin:
        raise ValueError("index too close to the truncation edge")
    v = np.zeros(rep.dim)
    v[n + n_max] = 1.0
    return state_from_amplitudes(rep, v)

def circle_harmonic_state(rep, n):
    """Position eigenstate exp(-i n theta) on the periodic grid."""
    if rep.basis != CIRCLE_GRID:
        raise ValueError("harmonic states live on the periodic realization")
    if abs(n) > rep.dim // 2 - 1:
        raise ValueError("harmonic index beyond the resolvable band")
    return state_from_amplitudes(rep, np.exp(-1j * n * rep.grid))


def circle_bump_state(rep, center=np.pi, width=0.4):
    """Smooth wavepacket on the angle grid, vanishing at the seam."""
    if rep.basis != CIRCLE_GRID:
        raise ValueError("bump states live on the periodic realization")
    return state_from_amplitudes(
        rep, np.exp(-0.5 * ((rep.grid - center) / width) ** 2))


def hyperbola_gaussian_state(rep, alpha):
    """Gaussian profile exp(-mu^2/(4 alpha)) on the hyperbolic-angle grid."""
    if rep.basis != HYPERBOLA_GRID:
        raise ValueError("gaussian profiles live on the hyperbolic realization")
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    return state_from_amplitudes(rep, np.exp(-rep.grid ** 2 / (4.0 * alpha)))


def expectation(state, matrix):
    """Weighted expectation value <a|M|a> of a Hermitian matrix."""
    acted = matrix @ state.amplitudes
    val = np.sum(state.weights * np.conj(state.amplitudes) * acted)
    return float(val.real)


def mean_and_spread(state, matrix):
    """First moment and standard deviation of a Hermitian observable."""
    m1 = expectation(state, matrix)
    m2 = expectation(state, matrix @ matrix)
    var = max(m2 - m1 * m1, 0.0)
    return m1, float(np.sqrt(var))
