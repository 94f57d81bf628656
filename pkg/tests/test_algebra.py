import numpy as np
import pytest

from qdeform.algebra import (
    AlgebraParams,
    algebra_residuals,
    build_circle_rep,
    build_fourier_rep,
    build_hyperbola_rep,
    circle_bump_state,
    circle_harmonic_state,
    commutator,
    commutator_convergence,
    delta_state,
    expectation,
    hermiticity_defects,
    hyperbola_gaussian_state,
    im_from_p,
    mean_and_spread,
    residual_matrices,
    state_from_amplitudes,
)
from qdeform.eigh import jacobi_eigh

PM = AlgebraParams(ell=0.7, epsilon=-1, r=1.3)
PC = AlgebraParams(ell=0.5, epsilon=-1)
PH = AlgebraParams(ell=0.4, epsilon=1)


# ---------------------------------------------------------------- parameters

def test_params_validation():
    with pytest.raises(ValueError):
        AlgebraParams(ell=1.0, epsilon=0)
    with pytest.raises(ValueError):
        AlgebraParams(ell=-0.1, epsilon=-1)
    with pytest.raises(ValueError):
        AlgebraParams(ell=1.0, epsilon=1, r=0.0)
    with pytest.raises(ValueError):
        AlgebraParams(ell=1.0, epsilon=1, mass=-2.0)


# ------------------------------------------------------------------ builders

def test_fourier_position_is_scaled_index():
    rep = build_fourier_rep(AlgebraParams(ell=1.0, epsilon=-1), 2)
    assert np.array_equal(np.diag(rep.position).real, [-2, -1, 0, 1, 2])
    rep2 = build_fourier_rep(AlgebraParams(ell=2.0, epsilon=-1), 2)
    assert np.array_equal(np.sort(np.diag(rep2.position).real),
                          [-4, -2, 0, 2, 4])


def test_builder_rejections():
    with pytest.raises(ValueError):
        build_fourier_rep(AlgebraParams(ell=1.0, epsilon=1), 8)
    with pytest.raises(ValueError):
        build_fourier_rep(AlgebraParams(ell=0.0, epsilon=-1), 8)
    with pytest.raises(ValueError):
        build_fourier_rep(PM, 1)
    with pytest.raises(ValueError):
        build_circle_rep(AlgebraParams(ell=1.0, epsilon=1), 16)
    with pytest.raises(ValueError):
        build_circle_rep(PC, 15)
    with pytest.raises(ValueError):
        build_circle_rep(PC, 6)
    with pytest.raises(ValueError):
        build_hyperbola_rep(PC, 4.0, 32)
    with pytest.raises(ValueError):
        build_hyperbola_rep(PH, -1.0, 32)
    with pytest.raises(ValueError):
        build_hyperbola_rep(PH, 4.0, 12)


def test_circle_momentum_band_is_r_over_ell():
    rep = build_circle_rep(AlgebraParams(ell=1.0, epsilon=-1, r=2.0), 16)
    top = np.max(np.abs(np.diag(rep.momentum).real))
    assert top <= 2.0 + 1e-14
    # the 16-point grid hits theta = pi/2, so the band edge is attained
    assert top == pytest.approx(2.0, abs=1e-14)


def test_operators_are_read_only():
    rep = build_fourier_rep(PM, 4)
    with pytest.raises(ValueError):
        rep.position[0, 0] = 9.0


# ------------------------------------------------------- bracket residuals

@pytest.mark.parametrize("n_max", [8, 16, 32, 64])
def test_fourier_interior_relations_hold(n_max):
    rep = build_fourier_rep(PM, n_max)
    rr = algebra_residuals(rep)
    for key in ("xp", "xc", "pc", "casimir", "jacobi"):
        assert rr.entry_interior[key] <= 1e-13, key


def test_fourier_full_residuals_live_at_corners():
    rep = build_fourier_rep(PM, 8)
    mats = residual_matrices(rep)
    corner = PM.r ** 2 / (2.0 * PM.ell)
    pc = mats["pc"]
    assert pc[0, 0] == pytest.approx(-1j * corner, abs=1e-13)
    assert pc[-1, -1] == pytest.approx(1j * corner, abs=1e-13)
    off = pc.copy()
    off[0, 0] = off[-1, -1] = 0.0
    assert np.max(np.abs(off)) <= 1e-14
    cas = mats["casimir"]
    assert cas[0, 0] == pytest.approx(-0.5 * PM.r ** 2, abs=1e-13)
    assert cas[-1, -1] == pytest.approx(-0.5 * PM.r ** 2, abs=1e-13)
    assert np.max(np.abs(mats["xp"])) <= 1e-14
    assert np.max(np.abs(mats["jacobi"])) <= 1e-13


@pytest.mark.parametrize("m", [8, 16, 32, 64])
def test_circle_diagonal_casimir_identity(m):
    rr = algebra_residuals(build_circle_rep(PC, m))
    assert rr.entry_full["casimir"] <= 1e-13
    assert rr.entry_full["pc"] == 0.0


def test_circle_probe_residuals_vanish():
    # entrywise the bracket defect is O(1); acting on a band-limited state
    # the spectral derivative is exact, so the weak residual is rounding
    rr = algebra_residuals(build_circle_rep(PC, 32))
    assert rr.entry_full["xp"] > 0.1
    for key in ("xp", "xc", "casimir", "jacobi"):
        assert rr.probe_interior[key] <= 1e-13, key


@pytest.mark.parametrize("m", [33, 65, 129])
def test_hyperbola_casimir_identity(m):
    rr = algebra_residuals(build_hyperbola_rep(PH, 3.0, m))
    assert rr.entry_full["casimir"] <= 1e-13
    assert rr.entry_full["pc"] == 0.0


def test_hyperbola_casimir_wide_window_cancellation():
    # cosh^2 - sinh^2 loses ~e^{2 mu_max} in float; document the level
    rr = algebra_residuals(build_hyperbola_rep(PH, 5.0, 129))
    assert rr.entry_full["casimir"] <= 1e-11


def test_hyperbola_probe_residual_level():
    rr = algebra_residuals(build_hyperbola_rep(PH, 6.0, 193))
    assert rr.probe_interior["xp"] <= 1e-5
    assert rr.probe_interior["xc"] <= 1e-5
    assert rr.probe_interior["jacobi"] <= 1e-12


def test_hyperbola_fourth_order_convergence():
    coarse, fine, ratio = commutator_convergence(PH, 6.0, 193)
    assert coarse > fine
    assert 12.0 <= ratio <= 20.0


@pytest.mark.parametrize("build,args", [
    (build_fourier_rep, (PM, 16)),
    (build_circle_rep, (PC, 32)),
    (build_hyperbola_rep, (PH, 4.0, 65)),
])
def test_hermiticity_under_basis_inner_product(build, args):
    defects = hermiticity_defects(build(*args))
    for name, value in defects.items():
        assert value <= 1e-13, name


# ------------------------------------------------------------------ spectra

def test_circle_position_spectrum_is_integer_lattice():
    rep = build_circle_rep(AlgebraParams(ell=1.0, epsilon=-1), 16)
    w, _ = jacobi_eigh(rep.position)
    assert np.max(np.abs(w - np.round(w))) <= 1e-10
    want = sorted(list(range(-7, 8)) + [0])
    assert np.allclose(np.sort(w), want, rtol=0.0, atol=1e-9)


def test_circle_fourier_unitary_equivalence():
    # the periodic grid carries one extra zero mode (even dimension); after
    # removing it the spectra coincide with the lattice of half dimension
    m = 32
    repc = build_circle_rep(PC, m)
    w = np.sort(np.linalg.eigvalsh(repc.position))
    w = np.delete(w, int(np.argmin(np.abs(w))))
    repf = build_fourier_rep(PC, m // 2 - 1)
    assert np.max(np.abs(w - np.sort(np.diag(repf.position).real))) <= 1e-9


# ----------------------------------------------------------------- im_from_p

def test_im_from_p_reference_points():
    exact, lead = im_from_p(0.0, PM)
    assert (exact, lead) == (PM.r, PM.r)
    exact, lead = im_from_p(0.1, AlgebraParams(ell=1.0, epsilon=1))
    assert exact == pytest.approx(1.0049875621120890, abs=1e-13)
    assert lead == pytest.approx(1.005, abs=1e-15)
    assert abs(exact - lead) == pytest.approx(1.2438e-5, rel=1e-3)
    exact, lead = im_from_p(1.0, AlgebraParams(ell=1.0, epsilon=-1))
    assert exact == 0.0
    assert lead == pytest.approx(0.5, abs=1e-15)


def test_im_from_p_band_domain():
    with pytest.raises(ValueError):
        im_from_p(4.0, AlgebraParams(ell=0.5, epsilon=-1))
    # epsilon = +1 has no band restriction
    im_from_p(100.0, AlgebraParams(ell=0.5, epsilon=1))


@pytest.mark.parametrize("p", [0.05, 0.1, 0.2, 0.35, 0.5])
@pytest.mark.parametrize("eps", [-1, 1])
def test_im_from_p_leading_order_window(p, eps):
    prm = AlgebraParams(ell=1.0, epsilon=eps)
    exact, lead = im_from_p(p, prm)
    assert abs(exact - lead) <= p ** 4


def test_im_from_p_heisenberg_limit_monotone():
    gaps = []
    for ell in (0.4, 0.2, 0.1, 0.05):
        prm = AlgebraParams(ell=ell, epsilon=-1)
        exact, lead = im_from_p(0.9, prm)
        gaps.append(abs(exact - 1.0))
        assert abs(lead - 1.0) <= abs(exact - 1.0) + 1e-15
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


# -------------------------------------------------------------------- states

def test_delta_state_moments():
    rep = build_fourier_rep(PM, 8)
    st = delta_state(rep, 3)
    assert st.norm_squared == pytest.approx(1.0, abs=1e-10)
    assert expectation(st, rep.position) == pytest.approx(3 * PM.ell, abs=1e-14)
    p2 = expectation(st, rep.momentum @ rep.momentum)
    assert p2 == pytest.approx(PM.r ** 2 / (2.0 * PM.ell ** 2), abs=1e-12)


def test_delta_state_edge_rejected():
    rep = build_fourier_rep(PM, 8)
    with pytest.raises(ValueError):
        delta_state(rep, 7)
    with pytest.raises(ValueError):
        delta_state(build_circle_rep(PC, 16), 0)


def test_harmonic_state_is_position_eigenstate():
    rep = build_circle_rep(PC, 32)
    for n in (-3, 0, 2):
        st = circle_harmonic_state(rep, n)
        mean, spread = mean_and_spread(st, rep.position)
        assert mean == pytest.approx(n * PC.ell, abs=1e-9)
        assert spread <= 1e-6


def test_harmonic_state_band_limit():
    with pytest.raises(ValueError):
        circle_harmonic_state(build_circle_rep(PC, 16), 8)


def test_bump_and_gaussian_states_normalized():
    bump = circle_bump_state(build_circle_rep(PC, 64))
    assert bump.norm_squared == pytest.approx(1.0, abs=1e-10)
    gauss = hyperbola_gaussian_state(build_hyperbola_rep(PH, 6.0, 129), 1.0)
    assert gauss.norm_squared == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        hyperbola_gaussian_state(build_hyperbola_rep(PH, 6.0, 129), 0.0)


def test_state_from_amplitudes_validation():
    rep = build_circle_rep(PC, 16)
    with pytest.raises(ValueError):
        state_from_amplitudes(rep, np.ones(15))
    with pytest.raises(ValueError):
        state_from_amplitudes(rep, np.zeros(16))


# ---------------------------------------------------------------- commutator

def test_commutator_basics():
    a = np.diag([1.0, 2.0]).astype(complex)
    b = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    assert np.array_equal(commutator(np.eye(2, dtype=complex), b),
                          np.zeros((2, 2)))
    assert np.allclose(commutator(a, b), [[0.0, -1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        commutator(a, np.zeros((3, 3)))
