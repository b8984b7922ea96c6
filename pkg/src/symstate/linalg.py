"""Dense complex matrix kernel for bipartite d x d operators.

Product basis convention: ``|ij>`` (1-based labels) sits at flat index
``(i - 1) * d + (j - 1)``.  Internally everything is a complex128
``numpy.ndarray``; the helpers here only add validation and the two
bipartite reindexings (partial transpose, realignment).
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotHermitian

__all__ = [
    "as_cmatrix",
    "max_abs",
    "hermitian_tol",
    "kron",
    "eig_hermitian",
    "partial_transpose",
    "realign",
    "trace_norm",
    "flat_index",
    "basis_label",
    "bipartite_dim",
]


def as_cmatrix(A) -> np.ndarray:
    """Return ``A`` as a finite 2-D complex128 array (copying only if needed)."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {M.shape}")
    if M.size == 0:
        raise DimensionMismatch("matrix must be non-empty")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    return M


def max_abs(A) -> float:
    return float(np.max(np.abs(A))) if np.size(A) else 0.0


def hermitian_tol(A, rel: float = 1e-12) -> float:
    """Default Hermiticity tolerance ``rel * max(1, ||A||_max)``."""
    return rel * max(1.0, max_abs(A))


def flat_index(i: int, j: int, d: int) -> int:
    """Flat index of ``|ij>`` for 1-based labels."""
    if not (1 <= i <= d and 1 <= j <= d):
        raise IndexError(f"labels ({i}, {j}) out of range for d={d}")
    return (i - 1) * d + (j - 1)


def basis_label(u: int, d: int) -> tuple[int, int]:
    """Inverse of :func:`flat_index`: flat index -> 1-based ``(i, j)``."""
    i, j = divmod(u, d)
    return i + 1, j + 1


def bipartite_dim(rho, d: int | None = None) -> int:
    """Local dimension of a square d^2 x d^2 matrix, checked against ``d``."""
    n, m = np.shape(rho)
    if n != m:
        raise DimensionMismatch(f"matrix is {n}x{m}, not square")
    if d is None:
        d = int(round(np.sqrt(n)))
    if d < 1 or d * d != n:
        raise DimensionMismatch(f"matrix of size {n} is not d^2 x d^2 for d={d}")
    return d


def kron(A, B) -> np.ndarray:
    return np.kron(as_cmatrix(A), as_cmatrix(B))


def eig_hermitian(A, tol: float | None = None, return_vectors: bool = False):
    """Eigenvalues (ascending) of a Hermitian matrix.

    The input is symmetrised as ``(A + A^H) / 2`` before the LAPACK call.

    Parameters
    ----------
    A : array_like
        Square matrix with ``||A - A^H||_max <= tol``.
    tol : float, optional
        Hermiticity tolerance; defaults to ``1e-12 * max(1, ||A||_max)``.
    return_vectors : bool
        Also return the unitary whose columns are the eigenvectors.

    Raises
    ------
    NotHermitian
        If the anti-Hermitian part exceeds ``tol``.
    """
    M = as_cmatrix(A)
    if M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"matrix is {M.shape[0]}x{M.shape[1]}, not square")
    if tol is None:
        tol = hermitian_tol(M)
    defect = max_abs(M - M.conj().T)
    if defect > tol:
        raise NotHermitian(f"||A - A^H||_max = {defect:.3g} exceeds tol {tol:.3g}")
    H = (M + M.conj().T) / 2
    if return_vectors:
        w, V = np.linalg.eigh(H)
        return w, V
    return np.linalg.eigvalsh(H)


def _as_tensor(rho, d):
    M = as_cmatrix(rho)
    bipartite_dim(M, d)
    return M.reshape(d, d, d, d)


def partial_transpose(rho, d: int) -> np.ndarray:
    """Transpose on the second tensor factor.

    ``out[(i,j),(k,l)] = rho[(i,l),(k,j)]``.  Pure reindexing, so applying it
    twice returns the input bit for bit.
    """
    T = _as_tensor(rho, d)
    return np.ascontiguousarray(T.transpose(0, 3, 2, 1)).reshape(d * d, d * d)


def realign(rho, d: int) -> np.ndarray:
    """Realignment ``R[(i,k),(j,l)] = rho[(i,j),(k,l)]``.

    Swapping the two middle tensor legs is its own inverse.
    """
    T = _as_tensor(rho, d)
    return np.ascontiguousarray(T.transpose(0, 2, 1, 3)).reshape(d * d, d * d)


def trace_norm(A) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(as_cmatrix(A), compute_uv=False)))
