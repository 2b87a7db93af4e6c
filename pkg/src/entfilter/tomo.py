"""Simulated two-photon polarization tomography.

Coincidence counts are drawn per analyzer setting from Poisson statistics
(with an optional uniform dark-count rate), and the state is re-estimated by
linear inversion of the Stokes parameters with a physicality projection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat
from .qstate import (
    IDENTITY_2,
    PAULIS,
    stokes_projector,
    unit_stokes_vector,
    validate_density_matrix,
)


class InsufficientStatisticsError(ValueError):
    """A tomography setting group carries zero total counts."""


#: Analyzer directions per station, fixed order: +z, -z, +x, -x, +y, -y.
ANALYZER_DIRECTIONS = (
    (0.0, 0.0, 1.0),
    (0.0, 0.0, -1.0),
    (1.0, 0.0, 0.0),
    (-1.0, 0.0, 0.0),
    (0.0, 1.0, 0.0),
    (0.0, -1.0, 0.0),
)


@dataclass(frozen=True)
class MeasurementSetting:
    """Analyzer directions (unit Stokes vectors) at the two detector stations."""

    proj_a: tuple[float, float, float]
    proj_b: tuple[float, float, float]

    def __post_init__(self):
        for name in ("proj_a", "proj_b"):
            v = unit_stokes_vector(getattr(self, name))
            object.__setattr__(self, name, (float(v[0]), float(v[1]), float(v[2])))


@dataclass(frozen=True)
class TomographyRecord:
    """Coincidence counts for a list of settings plus acquisition parameters.

    ``counts`` are non-negative; Poisson sampling produces integers while the
    exact-expectation mode stores the expected values themselves (floats).
    """

    settings: tuple[MeasurementSetting, ...]
    counts: tuple[float, ...]
    exposure: float
    dark_prob: float
    seed: int

    def __post_init__(self):
        if len(self.counts) != len(self.settings):
            raise ValueError("counts length must equal settings length")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")
        if self.exposure <= 0:
            raise ValueError("exposure must be > 0")
        if self.dark_prob < 0:
            raise ValueError("dark_prob must be >= 0")


def standard_settings() -> list[MeasurementSetting]:
    """All 36 analyzer pairs over the six Pauli eigendirections.

    Deterministic A-major order; the first setting is (+z, +z).
    """
    return [
        MeasurementSetting(a, b)
        for a in ANALYZER_DIRECTIONS
        for b in ANALYZER_DIRECTIONS
    ]


def coincidence_probability(rho, setting: MeasurementSetting) -> float:
    """Tr[rho (Pi_A x Pi_B)] for rank-1 analyzer projectors."""
    pa = stokes_projector(setting.proj_a)
    pb = stokes_projector(setting.proj_b)
    return float(np.trace(rho @ np.kron(pa, pb)).real)


def simulate_counts(
    rho,
    settings,
    exposure: float,
    dark_prob: float = 0.0,
    seed: int = 0,
    exact: bool = False,
) -> TomographyRecord:
    """Simulate coincidence counts for each setting.

    The expected count is mu = exposure * (Tr[rho Pi_A x Pi_B] + dark_prob).
    Each setting draws from its own NumPy PCG64 generator seeded with
    SeedSequence([seed, setting_index]), so records are reproducible for a
    fixed seed and settings may be simulated independently. With
    ``exact=True`` the expected values are stored without sampling.
    """
    rho = validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise ValueError("simulate_counts expects a 4x4 two-qubit state")
    if exposure <= 0:
        raise ValueError("exposure must be > 0")
    if dark_prob < 0:
        raise ValueError("dark_prob must be >= 0")
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    settings = tuple(settings)
    counts = []
    for index, setting in enumerate(settings):
        mu = exposure * (coincidence_probability(rho, setting) + dark_prob)
        mu = max(mu, 0.0)  # roundoff can push a dark-free zero slightly negative
        if exact:
            counts.append(float(mu))
        else:
            rng = np.random.default_rng([int(seed), index])
            counts.append(float(rng.poisson(mu)))
    return TomographyRecord(
        settings=settings,
        counts=tuple(counts),
        exposure=float(exposure),
        dark_prob=float(dark_prob),
        seed=int(seed),
    )


def _axis_and_sign(direction) -> tuple[int, int]:
    a = np.asarray(direction, dtype=float)
    for j in range(3):
        unit = np.zeros(3)
        unit[j] = 1.0
        if np.allclose(a, unit, atol=1e-9):
            return j, +1
        if np.allclose(a, -unit, atol=1e-9):
            return j, -1
    raise ValueError(
        "linear inversion requires analyzer directions along signed Pauli axes"
    )


def reconstruct(record: TomographyRecord) -> np.ndarray:
    """Density matrix from a tomography record by linear inversion.

    Stokes parameters come from difference-over-sum count ratios within each
    axis-pair group of four sign combinations; single-qubit parameters pool
    every group sharing that station axis. The raw estimate is projected to
    the physical set by clipping negative eigenvalues and renormalizing the
    trace, so the output always satisfies the density-matrix invariants.

    Raises :class:`InsufficientStatisticsError` when any axis-pair group is
    missing or has zero total counts.
    """
    corr_signed = np.zeros((3, 3))
    group_total = np.zeros((3, 3))
    a_signed = np.zeros(3)
    a_total = np.zeros(3)
    b_signed = np.zeros(3)
    b_total = np.zeros(3)
    for setting, n in zip(record.settings, record.counts):
        j, sign_a = _axis_and_sign(setting.proj_a)
        k, sign_b = _axis_and_sign(setting.proj_b)
        corr_signed[j, k] += sign_a * sign_b * n
        group_total[j, k] += n
        a_signed[j] += sign_a * n
        a_total[j] += n
        b_signed[k] += sign_b * n
        b_total[k] += n
    if np.any(group_total <= 0):
        j, k = np.argwhere(group_total <= 0)[0]
        raise InsufficientStatisticsError(
            f"setting group (axis {j}, axis {k}) has zero total counts"
        )
    corr = corr_signed / group_total
    stokes_a = a_signed / a_total
    stokes_b = b_signed / b_total

    rho = np.eye(4, dtype=complex)
    for j in range(3):
        rho += stokes_a[j] * np.kron(PAULIS[j], IDENTITY_2)
        rho += stokes_b[j] * np.kron(IDENTITY_2, PAULIS[j])
        for k in range(3):
            rho += corr[j, k] * np.kron(PAULIS[j], PAULIS[k])
    rho /= 4.0

    eig = qmat.hermitian_eig(rho)
    clipped = np.clip(eig.values, 0.0, None)
    total = float(clipped.sum())
    if total <= 0:
        raise InsufficientStatisticsError("estimate collapsed to the zero matrix")
    clipped /= total
    out = (eig.vectors * clipped) @ eig.vectors.conj().T
    return (out + out.conj().T) / 2


def record_to_json(record: TomographyRecord) -> dict:
    """JSON-ready dict with the documented schema."""
    counts = [
        int(c) if float(c).is_integer() else float(c) for c in record.counts
    ]
    return {
        "settings": [[list(s.proj_a), list(s.proj_b)] for s in record.settings],
        "counts": counts,
        "exposure": record.exposure,
        "dark_prob": record.dark_prob,
        "seed": record.seed,
    }


def record_from_json(obj: dict) -> TomographyRecord:
    """Inverse of :func:`record_to_json`."""
    settings = tuple(
        MeasurementSetting(tuple(map(float, pair[0])), tuple(map(float, pair[1])))
        for pair in obj["settings"]
    )
    counts = tuple(float(c) for c in obj["counts"])
    return TomographyRecord(
        settings=settings,
        counts=counts,
        exposure=float(obj["exposure"]),
        dark_prob=float(obj["dark_prob"]),
        seed=int(obj["seed"]),
    )
