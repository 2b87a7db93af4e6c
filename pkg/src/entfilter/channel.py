"""Polarization-channel elements acting on the two photons of a Bell pair.

Channel A is modeled as a decohering birefringent element followed by an
inherent mode filter; channel B holds the operator-controlled compensating
filter. Filters are partial polarizers P = exp(g/2 axis.sigma) in Jones
space; the decoherence is a probabilistic Pauli map obtained either directly
(mixing weight p) or from the spectral average of a fixed birefringence over
the photon bandwidth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qstate import (
    IDENTITY_2,
    bell_state,
    pauli_dot,
    unit_stokes_vector,
    validate_density_matrix,
)

X_AXIS = (1.0, 0.0, 0.0)
Y_AXIS = (0.0, 1.0, 0.0)
Z_AXIS = (0.0, 0.0, 1.0)

# A filter pair that leaves the state with less trace than this has blocked it.
_BLOCKED_TRACE = 1e-14


class FilterBlockedError(ValueError):
    """The filter pair annihilates the state (normalization trace below 1e-14)."""


def _as_unit_tuple(v) -> tuple[float, float, float]:
    a = unit_stokes_vector(v)
    # + 0.0 turns IEEE -0.0 into +0.0 for clean serialization
    return (float(a[0]) + 0.0, float(a[1]) + 0.0, float(a[2]) + 0.0)


@dataclass(frozen=True)
class FilterElement:
    """A partial polarizer: magnitude g >= 0 and a unit Stokes orientation.

    The orientation points at the favored polarization mode; the orthogonal
    mode is attenuated by e^(-g) in power.
    """

    magnitude: float
    orientation: tuple[float, float, float]

    def __post_init__(self):
        if self.magnitude < 0:
            raise ValueError("filter magnitude must be >= 0")
        object.__setattr__(self, "magnitude", float(self.magnitude))
        object.__setattr__(self, "orientation", _as_unit_tuple(self.orientation))

    @classmethod
    def along(cls, magnitude: float, direction) -> "FilterElement":
        """Build a filter along an arbitrary direction, normalizing it first."""
        d = np.asarray(direction, dtype=float)
        norm = float(np.linalg.norm(d))
        if norm == 0.0:
            raise ValueError("filter direction must be nonzero")
        return cls(float(magnitude), tuple(d / norm))

    @property
    def axis(self) -> np.ndarray:
        return np.asarray(self.orientation)


@dataclass(frozen=True)
class PauliNoiseSpec:
    """Probabilistic Pauli noise: unit axis in Stokes space, mixing weight p."""

    axis: tuple[float, float, float]
    p: float

    def __post_init__(self):
        object.__setattr__(self, "axis", _as_unit_tuple(self.axis))
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("mixing weight p must lie in [0, 1]")
        object.__setattr__(self, "p", float(self.p))

    @classmethod
    def bit_flip(cls, p: float) -> "PauliNoiseSpec":
        """Noise axis on the equator (perpendicular to the filter axis)."""
        return cls(X_AXIS, p)

    @classmethod
    def phase_flip(cls, p: float) -> "PauliNoiseSpec":
        """Noise axis at the pole (collinear with the filter axis)."""
        return cls(Z_AXIS, p)


@dataclass(frozen=True)
class BirefringenceSpec:
    """A fixed birefringent element seen by a photon of finite bandwidth.

    ``dgd`` is the differential group delay between the polarization modes in
    ps; ``spectral_width`` is the RMS angular-frequency width of the photon
    wavepacket in rad/ps; ``axis`` is the birefringence direction in Stokes
    space.
    """

    dgd: float
    axis: tuple[float, float, float]
    spectral_width: float

    def __post_init__(self):
        if self.dgd < 0:
            raise ValueError("differential group delay must be >= 0")
        if self.spectral_width <= 0:
            raise ValueError("spectral width must be > 0")
        object.__setattr__(self, "axis", _as_unit_tuple(self.axis))


def filter_operator(f: FilterElement) -> np.ndarray:
    """Jones operator of a filter: cosh(g/2) I + sinh(g/2) (axis . sigma).

    Hermitian and positive definite with eigenvalues e^(+-g/2), hence
    determinant 1.
    """
    half = f.magnitude / 2
    return np.cosh(half) * IDENTITY_2 + np.sinh(half) * pauli_dot(f.orientation)


def unitary_operator(axis, angle: float) -> np.ndarray:
    """Jones rotation about a Stokes axis: cos(a/2) I - i sin(a/2) (axis . sigma)."""
    axis = unit_stokes_vector(axis)
    half = angle / 2
    return np.cos(half) * IDENTITY_2 - 1j * np.sin(half) * pauli_dot(axis)


def pauli_channel_state(spec: PauliNoiseSpec) -> np.ndarray:
    """Two-qubit state of a Bell pair whose qubit A passed the noise map.

    Applies rho -> (1 - p/2) rho + (p/2) (axis.sigma) rho (axis.sigma) to the
    first qubit of the phi+ projector. For axis = x this is the bit-flip
    mixture with Bell weights (1 - p/2, p/2) on (phi+, psi+); for axis = z the
    phase-flip mixture with the same weights on (phi+, phi-).
    """
    phi = bell_state("phi+")
    flip = np.kron(pauli_dot(spec.axis), IDENTITY_2)
    return (1 - spec.p / 2) * phi + (spec.p / 2) * (flip @ phi @ flip)


def dephasing_from_spectrum(spec: BirefringenceSpec) -> PauliNoiseSpec:
    """Equivalent Pauli noise of a birefringent element, spectrally averaged.

    A Gaussian wavepacket of RMS width sigma traversing a differential group
    delay tau decoheres by d = exp(-tau^2 sigma^2 / 2); the frequency-averaged
    channel equals the probabilistic Pauli map along the same axis with
    p = 1 - d.
    """
    decoherence = float(np.exp(-(spec.dgd**2) * (spec.spectral_width**2) / 2))
    return PauliNoiseSpec(axis=spec.axis, p=1.0 - decoherence)


def apply_filters(
    rho_in, f_a: FilterElement, f_b: FilterElement
) -> tuple[np.ndarray, float]:
    """Filter both qubits and renormalize.

    Returns ``(rho_f, transmission)`` where

        rho_f = (P_A x P_B) rho (P_A x P_B)^dagger / Tr[...]

    and ``transmission`` is the pair-survival probability for the physically
    normalized filters e^(-g/2) P, whose favored mode passes with unit
    probability. Raises :class:`FilterBlockedError` when the filters remove
    the state entirely.
    """
    rho_in = validate_density_matrix(rho_in)
    if rho_in.shape != (4, 4):
        raise ValueError("apply_filters expects a 4x4 two-qubit state")
    pair = np.kron(filter_operator(f_a), filter_operator(f_b))
    out = pair @ rho_in @ pair.conj().T
    trace = float(np.trace(out).real)
    if trace < _BLOCKED_TRACE:
        raise FilterBlockedError(
            f"filters block the state entirely (normalization trace {trace:.3e})"
        )
    transmission = min(1.0, float(np.exp(-f_a.magnitude - f_b.magnitude) * trace))
    rho_f = out / trace
    rho_f = (rho_f + rho_f.conj().T) / 2
    return rho_f, transmission


def bloch_ellipsoid(spec: PauliNoiseSpec) -> tuple[float, float, float]:
    """Semi-axes of the Bloch-sphere image of the single-qubit noise map.

    The component along the noise axis is preserved; the two transverse
    components shrink by 1 - p, so the sphere becomes a prolate spheroid
    aligned with the axis. Returned as (along axis, transverse, transverse).
    """
    return (1.0, 1.0 - spec.p, 1.0 - spec.p)
