"""Deterministic Hermitian eigensolver by cyclic Jacobi rotations.

The matrices in this package stay small (a few hundred rows at most), where
classical Jacobi iteration is accurate, simple and fully reproducible: the
sweep order is fixed, ascending eigenvalues are returned, degenerate groups
are ordered by the index of each eigenvector's dominant component, and every
eigenvector is phase-fixed so its dominant component is real and positive.
"""

import numpy as np


def jacobi_eigh(matrix, tol=1e-14, max_sweeps=100):
    """Diagonalize a Hermitian matrix.

    Returns (eigenvalues, eigenvectors); eigenvalues ascending, eigenvectors
    as columns.  The input is symmetrized once up front so harmless rounding
    asymmetry cannot leak into the iteration.
    """
    a = np.array(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return a.real.reshape(1), v

    scale = max(float(np.max(np.abs(a))), np.finfo(float).tiny)
    iu = np.triu_indices(n, k=1)
    converged = False
    for _ in range(max_sweeps):
        off = float(np.max(np.abs(a[iu])))
        if off <= tol * scale:
            converged = True
            break
        skip = tol * scale
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                rho = abs(apq)
                if rho <= skip:
                    continue
                phase = apq / rho
                tau = (a[q, q].real - a[p, p].real) / (2.0 * rho)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = 1.0 / (tau - np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # unitary plane rotation R with R[p,p]=R[q,q]=c,
                # R[p,q]=s*phase, R[q,p]=-s*conj(phase); apply A <- R^H A R
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * np.conj(phase) * colq
                a[:, q] = s * phase * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * phase * rowq
                a[q, :] = s * np.conj(phase) * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                colp = v[:, p].copy()
                colq = v[:, q].copy()
                v[:, p] = c * colp - s * np.conj(phase) * colq
                v[:, q] = s * phase * colp + c * colq
    if not converged and float(np.max(np.abs(a[iu]))) > tol * scale:
        raise RuntimeError("jacobi iteration did not converge")

    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]

    # deterministic ordering inside (near-)degenerate groups: ascending
    # index of the dominant eigenvector component
    dominant = np.argmax(np.abs(v), axis=0)
    tie = 64.0 * tol * max(scale, 1.0)
    i = 0
    while i < n:
        j = i + 1
        while j < n and w[j] - w[j - 1] <= tie:
            j += 1
        if j - i > 1:
            sub = np.argsort(dominant[i:j], kind="stable")
            w[i:j] = w[i:j][sub]
            v[:, i:j] = v[:, i:j][:, sub]
            dominant[i:j] = dominant[i:j][sub]
        i = j

    # phase convention: dominant component real positive
    for col in range(n):
        k = dominant[col]
        z = v[k, col]
        m = abs(z)
        if m > 0.0:
            v[:, col] *= np.conj(z) / m
    return w, v
