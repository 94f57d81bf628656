import numpy as np
import pytest

from qdeform.eigh import jacobi_eigh


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


@pytest.mark.parametrize("n,seed", [(4, 0), (9, 1), (17, 2), (40, 3)])
def test_matches_reference_eigenvalues(n, seed):
    # numpy.linalg is the cross-check oracle here, not a runtime dependency
    a = random_hermitian(n, seed)
    w, v = jacobi_eigh(a)
    ref = np.linalg.eigvalsh(a)
    assert np.max(np.abs(w - ref)) <= 1e-12 * max(1.0, np.max(np.abs(ref)))


@pytest.mark.parametrize("n,seed", [(6, 5), (25, 6)])
def test_eigenpair_residual_and_orthonormality(n, seed):
    a = random_hermitian(n, seed)
    w, v = jacobi_eigh(a)
    res = a @ v - v * w[None, :]
    assert np.max(np.abs(res)) <= 1e-12 * max(1.0, np.max(np.abs(w)))
    gram = v.conj().T @ v
    assert np.max(np.abs(gram - np.eye(n))) <= 1e-12


def test_real_symmetric_input():
    a = np.array([[3.0, 0.0, -1.0], [0.0, 2.0, 0.0], [-1.0, 0.0, 3.0]])
    w, _ = jacobi_eigh(a)
    assert np.allclose(w, [2.0, 2.0, 4.0], rtol=0.0, atol=1e-14)


def test_ascending_order():
    w, _ = jacobi_eigh(np.diag([4.0, -1.0, 2.0, 0.5]).astype(complex))
    assert np.all(np.diff(w) >= 0.0)


def test_degenerate_tie_break_is_stable():
    # two-fold degeneracy: dominant-component rule fixes the column order
    a = np.diag([1.0, 1.0, 3.0]).astype(complex)
    w, v = jacobi_eigh(a)
    assert np.allclose(w, [1.0, 1.0, 3.0])
    assert abs(v[0, 0]) > 0.9 and abs(v[1, 1]) > 0.9


def test_deterministic_repeat():
    a = random_hermitian(12, 9)
    w1, v1 = jacobi_eigh(a)
    w2, v2 = jacobi_eigh(a)
    assert np.array_equal(w1, w2)
    assert np.array_equal(v1, v2)


def test_rejects_nonsquare():
    with pytest.raises(ValueError):
        jacobi_eigh(np.zeros((3, 4)))
