"""Two-qubit polarization states and their entanglement/information measures.

Conventions, used consistently across the package:

* computational basis order |HH>, |HV>, |VH>, |VV>, with |H> = (1, 0);
* Pauli order sigma_1 = X, sigma_2 = Y, sigma_3 = Z, so |H> sits at +z in
  Stokes space;
* entropies are base-2 (bits).
"""

from __future__ import annotations

import numpy as np

from . import qmat
from .qmat import hermitian_eig, kron, matrix_sqrt_psd, partial_trace

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
IDENTITY_2 = np.eye(2, dtype=complex)

BELL_LABELS = ("phi+", "phi-", "psi+", "psi-")

# Unnormalized (+-1 amplitude) Bell components; dividing the outer product by
# 2 instead of normalizing the vector keeps the projector entries exactly +-0.5.
_BELL_COMPONENTS = {
    "phi+": np.array([1, 0, 0, 1], dtype=complex),
    "phi-": np.array([1, 0, 0, -1], dtype=complex),
    "psi+": np.array([0, 1, 1, 0], dtype=complex),
    "psi-": np.array([0, 1, -1, 0], dtype=complex),
}

#: Tolerance on |Tr(rho) - 1| when validating a density matrix.
TRACE_TOL = 1e-10
# Eigenvalues below this floor are excluded from entropy sums.
_ENTROPY_EIG_FLOOR = 1e-12

_BASIS_LABELS = {2: ["H", "V"], 4: ["HH", "HV", "VH", "VV"]}


def unit_stokes_vector(v) -> np.ndarray:
    """Validate and return a real 3-vector of unit length (within 1e-12)."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a Stokes 3-vector, got shape {a.shape}")
    if abs(np.linalg.norm(a) - 1.0) > 1e-12:
        raise ValueError("Stokes vector must have unit norm within 1e-12")
    return a


def pauli_dot(axis) -> np.ndarray:
    """The 2x2 operator axis . sigma for a Stokes-space direction."""
    a = np.asarray(axis, dtype=float)
    return a[0] * SIGMA_X + a[1] * SIGMA_Y + a[2] * SIGMA_Z


def stokes_projector(axis) -> np.ndarray:
    """Rank-1 projector (I + axis . sigma) / 2 onto an analyzer direction."""
    return (IDENTITY_2 + pauli_dot(unit_stokes_vector(axis))) / 2


def bell_state(label: str) -> np.ndarray:
    """Projector onto one of the four Bell states.

    Accepted labels: "phi+", "phi-", "psi+", "psi-".
    """
    try:
        w = _BELL_COMPONENTS[label]
    except KeyError:
        raise ValueError(
            f"unknown Bell label {label!r}; expected one of {BELL_LABELS}"
        ) from None
    return np.outer(w, w.conj()) / 2


def validate_density_matrix(rho) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return the coerced array."""
    rho = qmat.as_matrix(rho)
    if qmat.hermitian_defect(rho) > qmat.HERMITICITY_TOL:
        raise ValueError("density matrix is not Hermitian within 1e-10")
    trace = float(np.trace(rho).real)
    if abs(trace - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace {trace!r} is not 1 within 1e-10")
    eigenvalues = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    if eigenvalues[0] < -qmat.PSD_TOL:
        raise ValueError(f"density matrix has negative eigenvalue {eigenvalues[0]:.3e}")
    return rho


def _require_two_qubit(rho) -> np.ndarray:
    rho = validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 two-qubit density matrix")
    return rho


def von_neumann_entropy(rho) -> float:
    """Entropy -sum(w log2 w) over the eigenvalues, in bits.

    Eigenvalues below 1e-12 are dropped (0 log 0 = 0); the result is clamped
    to [0, log2(dim)] to absorb roundoff at the boundaries.
    """
    rho = validate_density_matrix(rho)
    w = hermitian_eig(rho).values
    w = w[w > _ENTROPY_EIG_FLOOR]
    entropy = float(-np.sum(w * np.log2(w)))
    return min(max(entropy, 0.0), float(np.log2(rho.shape[0])))


def mutual_information(rho) -> float:
    """Mutual quantum information S(A) + S(B) - S(AB) in bits.

    Always in [0, 2] for a valid two-qubit state; tiny negative roundoff
    (product states) is returned as exactly 0.
    """
    rho = _require_two_qubit(rho)
    mi = (
        von_neumann_entropy(partial_trace(rho, 0))
        + von_neumann_entropy(partial_trace(rho, 1))
        - von_neumann_entropy(rho)
    )
    if -1e-12 < mi < 0.0:
        return 0.0
    return mi


def concurrence(rho) -> float:
    """Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit state.

    The l_i are the descending square roots of the eigenvalues of the
    Hermitian product sqrt(rho) rho_tilde sqrt(rho), where
    rho_tilde = (sigma_y x sigma_y) rho* (sigma_y x sigma_y). They are
    evaluated here as the singular values of
    K = sqrt(rho) (sigma_y x sigma_y) sqrt(rho)*, which satisfies
    K K^dagger = sqrt(rho) rho_tilde sqrt(rho); going through K avoids the
    ~1e-8 noise floor that square roots of near-zero eigenvalues would
    otherwise introduce for low-rank states.
    """
    rho = _require_two_qubit(rho)
    spin_flip = kron(SIGMA_Y, SIGMA_Y)
    root = matrix_sqrt_psd(rho)
    lam = np.linalg.svd(root @ spin_flip @ root.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def correlation_matrix(rho) -> np.ndarray:
    """Stokes correlation matrix t_jk = Tr[rho (sigma_j x sigma_k)], 3x3 real."""
    rho = _require_two_qubit(rho)
    t = np.empty((3, 3))
    for j, sj in enumerate(PAULIS):
        for k, sk in enumerate(PAULIS):
            t[j, k] = float(np.trace(rho @ kron(sj, sk)).real)
    return t


def bell_diagonal_weights(rho) -> dict[str, float]:
    """Overlaps <Bell_i|rho|Bell_i> keyed by Bell label.

    The four weights sum to 1 (within roundoff) exactly when the state is
    diagonal-compatible in this Bell basis; callers decide what to do with
    states for which the sum falls short.
    """
    rho = _require_two_qubit(rho)
    return {
        label: float(np.real(w.conj() @ rho @ w)) / 2
        for label, w in _BELL_COMPONENTS.items()
    }


def fidelity_pure(rho, target) -> float:
    """Overlap Tr[rho target] with a pure-state projector, in [0, 1]."""
    rho = validate_density_matrix(rho)
    target = qmat.as_matrix(target)
    if target.shape != rho.shape:
        raise ValueError("state and target must have the same dimension")
    purity = float(np.trace(target @ target).real)
    if abs(purity - 1.0) > 1e-9:
        raise ValueError("target must be a pure-state projector (Tr[target^2] = 1)")
    overlap = float(np.trace(rho @ target).real)
    return min(max(overlap, 0.0), 1.0)


def density_matrix_to_json(rho) -> dict:
    """JSON-ready dict: nested [re, im] pairs plus the basis ordering."""
    rho = qmat.as_matrix(rho)
    return {
        "basis": list(_BASIS_LABELS[rho.shape[0]]),
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in rho],
    }


def density_matrix_from_json(obj: dict) -> np.ndarray:
    """Inverse of :func:`density_matrix_to_json`; checks shape and basis order."""
    basis = list(obj["basis"])
    dim = len(basis)
    if basis not in (_BASIS_LABELS.get(2), _BASIS_LABELS.get(4)):
        raise ValueError(f"unsupported basis ordering {basis!r}")
    rows = obj["matrix"]
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ValueError(f"matrix does not match basis dimension {dim}")
    mat = np.array(
        [[complex(entry[0], entry[1]) for entry in row] for row in rows], dtype=complex
    )
    return qmat.as_matrix(mat)
