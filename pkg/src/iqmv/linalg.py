"""
Dense real linear algebra for small square matrices.

Gaussian elimination with partial pivoting backs ``invert``, ``solve`` and
``determinant``; a cyclic Jacobi sweep backs ``symmetric_eigenvalues``.
Matrices here are tiny (n up to about 16), so clarity wins over blocking.
"""
import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import NotSymmetric, SingularMatrix


def as_matrix(M):
    """Return ``M`` as a finite, square float64 array (a copy)."""
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def max_norm(M):
    return float(np.max(np.abs(M))) if np.size(M) else 0.0


def _eliminate(A, B, pivot_tol):
    """Forward elimination on ``A`` with the same row operations on ``B``.

    Both arrays are modified in place. Returns the permutation sign.
    """
    n = A.shape[0]
    threshold = pivot_tol * max_norm(A)
    sign = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[p, k]) < threshold or A[p, k] == 0.0:
            raise SingularMatrix(f"pivot {k} has magnitude {abs(A[p, k]):.3e}")
        if p != k:
            A[[k, p]] = A[[p, k]]
            B[[k, p]] = B[[p, k]]
            sign = -sign
        factors = A[k + 1:, k] / A[k, k]
        A[k + 1:, k:] -= np.outer(factors, A[k, k:])
        B[k + 1:] -= np.outer(factors, B[k])
    return sign


def _back_substitute(U, B):
    n = U.shape[0]
    X = np.zeros_like(B)
    for k in range(n - 1, -1, -1):
        X[k] = (B[k] - U[k, k + 1:] @ X[k + 1:]) / U[k, k]
    return X


def invert(M, tol=DEFAULT_TOLERANCES):
    """Inverse of ``M`` by Gauss-Jordan style elimination with partial pivoting.

    Raises SingularMatrix when a pivot is below ``tol.pivot * max|M_ij|``.
    """
    A = as_matrix(M)
    n = A.shape[0]
    B = np.eye(n)
    _eliminate(A, B, tol.pivot)
    return _back_substitute(A, B)


def solve(M, b, tol=DEFAULT_TOLERANCES):
    """Solve ``M w = b`` for a vector ``b``."""
    A = as_matrix(M)
    rhs = np.array(b, dtype=float)
    if rhs.shape != (A.shape[0],):
        raise ValueError(f"right-hand side has shape {rhs.shape}, expected ({A.shape[0]},)")
    B = rhs.reshape(-1, 1).copy()
    _eliminate(A, B, tol.pivot)
    return _back_substitute(A, B)[:, 0]


def determinant(M):
    """Product of the elimination pivots times the permutation sign.

    Never raises for singular input; an exactly zero pivot column gives 0.0.
    """
    A = as_matrix(M)
    n = A.shape[0]
    sign = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if A[p, k] == 0.0:
            return 0.0
        if p != k:
            A[[k, p]] = A[[p, k]]
            sign = -sign
        factors = A[k + 1:, k] / A[k, k]
        A[k + 1:, k:] -= np.outer(factors, A[k, k:])
    return sign * float(np.prod(np.diag(A)))


def is_symmetric(M, tol=DEFAULT_TOLERANCES):
    A = np.asarray(M, dtype=float)
    return max_norm(A - A.T) <= tol.symmetry * max_norm(A)


def symmetric_eigenvalues(M, tol=DEFAULT_TOLERANCES, max_sweeps=100):
    """Ascending eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps the upper triangle row by row, annihilating each off-diagonal
    entry in turn, until every off-diagonal magnitude is at most
    ``tol.jacobi * ||M||_F``.
    """
    A = as_matrix(M)
    if not is_symmetric(A, tol):
        raise NotSymmetric(f"asymmetry {max_norm(A - A.T):.3e} exceeds tolerance")
    A = 0.5 * (A + A.T)
    n = A.shape[0]
    stop = tol.jacobi * float(np.linalg.norm(A))
    off = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        if n == 1 or np.max(np.abs(A[off])) <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= stop:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) plane rotation
                rp, rq = A[p].copy(), A[q].copy()
                A[p], A[q] = c * rp - s * rq, s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p], A[:, q] = c * cp - s * cq, s * cp + c * cq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diag(A))
