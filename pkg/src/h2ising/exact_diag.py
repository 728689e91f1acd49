"""Cyclic Jacobi eigensolver for small Hermitian matrices."""

from __future__ import annotations

import numpy as np

MAX_DIM = 64
OFF_TOL = 1e-12
HERMITIAN_TOL = 1e-12
MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def _check(M) -> np.ndarray:
    A = np.array(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if A.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {A.shape[0]} exceeds {MAX_DIM}")
    scale = max(1.0, float(np.abs(A).max(initial=0.0)))
    if np.abs(A - A.conj().T).max(initial=0.0) > HERMITIAN_TOL * scale:
        raise NotHermitianError("matrix is not Hermitian")
    return 0.5 * (A + A.conj().T)


def _off(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi(M, tol: float = OFF_TOL, want_vectors: bool = True):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, V)`` with ascending eigenvalues and ``M @ V[:, k] = w[k] V[:, k]``.
    Iteration stops once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||M||_F)``.
    """
    A = _check(M)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    target = tol * max(1.0, float(np.linalg.norm(A)))
    for _ in range(MAX_SWEEPS):
        if _off(A) < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                phase = apq / r
                app, aqq = A[p, p].real, A[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # phase-align the pair, then apply a real Givens rotation
                U = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ U
                A[idx, :] = U.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                if want_vectors:
                    V[:, idx] = V[:, idx] @ U
    else:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
    w = np.diag(A).real
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def eigenvalues(M, tol: float = OFF_TOL) -> np.ndarray:
    return jacobi(M, tol, want_vectors=False)[0]


def eigh(M, tol: float = OFF_TOL):
    return jacobi(M, tol, want_vectors=True)


def ground_energy(M) -> float:
    return float(eigenvalues(M)[0])
