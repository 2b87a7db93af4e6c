"""Dense complex linear algebra for the 2x2 and 4x4 matrices used everywhere else.

All functions are pure and operate on plain ``numpy`` arrays coerced to
complex. Matrices larger than 4x4 are rejected on purpose; nothing in this
package needs them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Frobenius-norm tolerance for accepting a matrix as Hermitian.
HERMITICITY_TOL = 1e-10
#: Eigenvalues above this (negative) floor are treated as roundoff and clipped.
PSD_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite square complex array of dimension 2 or 4."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in (2, 4):
        raise ValueError(f"expected dimension 2 or 4, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def hermitian_defect(m: np.ndarray) -> float:
    """Frobenius distance between a matrix and its conjugate transpose."""
    return float(np.linalg.norm(m - m.conj().T))


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    ``values`` holds the real eigenvalues in descending order; the columns of
    ``vectors`` are the matching orthonormal eigenvectors.
    """

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """V diag(values) V^dagger."""
        return (self.vectors * self.values) @ self.vectors.conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices (row-major block convention)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("kron expects two 2x2 matrices")
    return np.kron(a, b)


def hermitian_eig(m) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Rejects input whose Hermitian defect exceeds ``HERMITICITY_TOL``. The
    matrix is symmetrized before the solve so the result is exactly the
    decomposition of (m + m^dagger)/2.
    """
    m = as_matrix(m)
    if hermitian_defect(m) > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian within {HERMITICITY_TOL:g}")
    values, vectors = np.linalg.eigh((m + m.conj().T) / 2)
    order = np.argsort(values)[::-1]
    return EigenDecomposition(values=values[order].copy(), vectors=vectors[:, order].copy())


def partial_trace(m, keep: int) -> np.ndarray:
    """Reduced 2x2 matrix of a 4x4 two-qubit operator.

    ``keep=0`` keeps qubit A (first tensor factor), ``keep=1`` keeps qubit B.
    The trace of the input is preserved.
    """
    m = as_matrix(m)
    if m.shape != (4, 4):
        raise ValueError("partial_trace expects a 4x4 matrix")
    if keep not in (0, 1):
        raise ValueError("keep must be 0 (qubit A) or 1 (qubit B)")
    r = m.reshape(2, 2, 2, 2)
    if keep == 0:
        return np.einsum("abcb->ac", r)
    return np.einsum("abad->bd", r)


def matrix_sqrt_psd(m) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-PSD_TOL, 0] are clipped to zero before the root is
    formed; anything more negative is a genuinely indefinite input and is
    rejected.
    """
    eig = hermitian_eig(m)
    if eig.values[-1] < -PSD_TOL:
        raise ValueError(
            f"matrix is not positive semidefinite (min eigenvalue {eig.values[-1]:.3e})"
        )
    roots = np.sqrt(np.clip(eig.values, 0.0, None))
    out = (eig.vectors * roots) @ eig.vectors.conj().T
    return (out + out.conj().T) / 2
