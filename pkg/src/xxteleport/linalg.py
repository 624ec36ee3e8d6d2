"""Dense complex linear algebra for 2-, 4- and 8-dimensional Hermitian problems.

All matrices are plain complex ndarrays.  Sizes are tiny, so the emphasis is
on strict validation: bad inputs fail loudly instead of propagating NaNs or
silently non-Hermitian results downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

# Structural checks (hermiticity, trace, positivity) share this tolerance.
HERMITIAN_ATOL = 1e-12
DENSITY_ATOL = 1e-12

ALLOWED_DIMS = (2, 4, 8)
MAX_DIM = 8

# Pauli matrices sigma_0..sigma_3 (identity, x, y, z).
SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
for _s in SIGMA:
    _s.flags.writeable = False


@dataclass(frozen=True)
class HermitianEigenDecomposition:
    """Eigenvalues in ascending order; eigenvectors as orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_square_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce to a complex square ndarray of dimension 2, 4 or 8."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    if a.shape[0] not in ALLOWED_DIMS:
        raise ValueError(f"{name} dimension must be one of {ALLOWED_DIMS}, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def validate_hermitian(m, name: str = "matrix", atol: float = HERMITIAN_ATOL) -> np.ndarray:
    a = as_square_matrix(m, name)
    if np.abs(a - a.conj().T).max() > atol:
        raise ValueError(f"{name} is not Hermitian within {atol:g}")
    return a


def validate_density(rho, dim: int | None = None, name: str = "rho",
                     atol: float = DENSITY_ATOL) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, spectrum >= -atol."""
    a = validate_hermitian(rho, name, atol)
    if dim is not None and a.shape[0] != dim:
        raise ValueError(f"{name} must be {dim}x{dim}, got {a.shape[0]}x{a.shape[0]}")
    tr = np.trace(a)
    if abs(tr - 1.0) > atol:
        raise ValueError(f"{name} trace must be 1, got {tr:.15g}")
    w = np.linalg.eigvalsh(a)
    if w[0] < -atol:
        raise ValueError(f"{name} has negative eigenvalue {w[0]:.3e}")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product; inputs must be 2- or 4-dimensional, product at most 8."""
    a = as_square_matrix(a, "a")
    b = as_square_matrix(b, "b")
    if a.shape[0] not in (2, 4) or b.shape[0] not in (2, 4):
        raise ValueError("kron factors must have dimension 2 or 4")
    if a.shape[0] * b.shape[0] > MAX_DIM:
        raise ValueError(
            f"kron product dimension {a.shape[0] * b.shape[0]} exceeds {MAX_DIM}")
    return np.kron(a, b)


def eigh(m) -> HermitianEigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    a = validate_hermitian(m, "m")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"Hermitian eigensolver failed to converge: {exc}") from exc
    return HermitianEigenDecomposition(eigenvalues=w, eigenvectors=v)


def hermitian_function(m, f: Callable[[float], float]) -> np.ndarray:
    """Spectral function V diag(f(lambda)) V^dagger of a Hermitian matrix."""
    dec = eigh(m)
    fw = np.array([float(f(x)) for x in dec.eigenvalues])
    v = dec.eigenvectors
    return (v * fw) @ v.conj().T


def adjoint(m) -> np.ndarray:
    return as_square_matrix(m).conj().T


def trace(m) -> complex:
    return complex(np.trace(as_square_matrix(m)))


def matmul(a, b) -> np.ndarray:
    a = as_square_matrix(a, "a")
    b = as_square_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b
