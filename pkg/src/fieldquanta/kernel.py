"""Dense linear algebra kernel with a single global tolerance policy.

Every numeric decision elsewhere in the package (rank, equality, commutation)
goes through a :class:`TolerancePolicy` so that classification answers are
reproducible: the dichotomies being computed are exact, and floating point
needs one declared cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput


@dataclass(frozen=True)
class TolerancePolicy:
    """Global tolerances.

    eps_rel is the relative tolerance for equality/commutation residuals.
    eps_rank is a factor: the rank cutoff for a matrix M is eps_rank * ||M||.
    """

    eps_rel: float = 1e-9
    eps_rank: float = 1e-8

    def __post_init__(self):
        if self.eps_rel <= 0 or self.eps_rank <= 0:
            raise InvalidInput("tolerances must be strictly positive")

    def rank_cutoff(self, m: np.ndarray) -> float:
        norm = np.linalg.norm(m, 2) if m.size else 0.0
        return self.eps_rank * max(norm, 0.0)

    def close(self, a: np.ndarray, b: np.ndarray, scale: float = 1.0) -> bool:
        return float(np.linalg.norm(np.asarray(a) - np.asarray(b))) <= self.eps_rel * max(1.0, scale)


DEFAULT_TOL = TolerancePolicy()


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.size == 0:
        raise InvalidInput(f"expected a nonempty 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("matrix has non-finite entries")
    return a


def nullspace(m, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of ker(m), columns of the returned array.

    Works for real and complex matrices. The basis dimension is
    cols - numerical rank, with rank decided by the policy cutoff on the
    singular values.
    """
    a = _as_matrix(m)
    _, s, vh = np.linalg.svd(a)
    cutoff = tol.eps_rank * (s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return vh[rank:].conj().T


def eig(m, symmetric: bool = False, tol: TolerancePolicy = DEFAULT_TOL):
    """Eigendecomposition of a square matrix.

    symmetric=True checks the symmetry residual and returns real eigenvalues
    sorted ascending with orthonormal eigenvectors. The general path returns
    the complex spectrum (conjugate-closed for real input) and eigenvectors.
    """
    a = _as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise InvalidInput(f"eig needs a square matrix, got {a.shape}")
    if symmetric:
        if not tol.close(a, a.conj().T, scale=np.linalg.norm(a)):
            raise InvalidInput("matrix is not symmetric within tolerance")
        return np.linalg.eigh(a)
    return np.linalg.eig(a)


def expm(x, t: float = 1.0) -> np.ndarray:
    """exp(t*x) by scaling-and-squaring with a truncated Taylor series."""
    a = _as_matrix(x)
    if a.shape[0] != a.shape[1]:
        raise InvalidInput(f"expm needs a square matrix, got {a.shape}")
    a = a * t
    n = a.shape[0]
    norm = np.linalg.norm(a, 1)
    # scale until ||A/2^s|| <= 0.5, then 18 Taylor terms reach ~1e-21
    s = max(0, int(np.ceil(np.log2(norm / 0.5))) if norm > 0.5 else 0)
    a = a / (2.0 ** s)
    out = np.eye(n, dtype=a.dtype)
    term = np.eye(n, dtype=a.dtype)
    for k in range(1, 19):
        term = term @ a / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out


def orthonormal_columns(vectors, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the column span of `vectors`."""
    a = _as_matrix(vectors)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    cutoff = tol.eps_rank * (s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return u[:, :rank]


def matrix_rank(m, tol: TolerancePolicy = DEFAULT_TOL) -> int:
    a = _as_matrix(m)
    s = np.linalg.svd(a, compute_uv=False)
    cutoff = tol.eps_rank * (s[0] if s.size else 0.0)
    return int(np.sum(s > cutoff))
