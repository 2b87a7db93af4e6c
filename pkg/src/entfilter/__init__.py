"""entfilter: Bell-pair transmission through decohering, filtering polarization
channels, and recovery of mutual quantum information by local filtering."""

from .channel import (
    BirefringenceSpec,
    FilterBlockedError,
    FilterElement,
    PauliNoiseSpec,
    apply_filters,
    bloch_ellipsoid,
    dephasing_from_spectrum,
    filter_operator,
    pauli_channel_state,
    unitary_operator,
)
from .qmat import EigenDecomposition, hermitian_eig, kron, matrix_sqrt_psd, partial_trace
from .qstate import (
    BELL_LABELS,
    bell_diagonal_weights,
    bell_state,
    concurrence,
    correlation_matrix,
    density_matrix_from_json,
    density_matrix_to_json,
    fidelity_pure,
    mutual_information,
    validate_density_matrix,
    von_neumann_entropy,
)
from .recover import (
    RecoveryPlan,
    SweepPoint,
    average_entanglement,
    argmax_ratio,
    concurrence_after_filtering,
    optimal_magnitude,
    optimal_orientation,
    plan_recovery,
    ratio_scan,
    sweep,
    sweep_to_csv,
    sweep_to_json,
)
from .tomo import (
    InsufficientStatisticsError,
    MeasurementSetting,
    TomographyRecord,
    reconstruct,
    record_from_json,
    record_to_json,
    simulate_counts,
    standard_settings,
)

__version__ = "0.1.0"

__all__ = [
    "BELL_LABELS",
    "BirefringenceSpec",
    "EigenDecomposition",
    "FilterBlockedError",
    "FilterElement",
    "InsufficientStatisticsError",
    "MeasurementSetting",
    "PauliNoiseSpec",
    "RecoveryPlan",
    "SweepPoint",
    "TomographyRecord",
    "apply_filters",
    "argmax_ratio",
    "average_entanglement",
    "bell_diagonal_weights",
    "bell_state",
    "bloch_ellipsoid",
    "concurrence",
    "concurrence_after_filtering",
    "correlation_matrix",
    "dephasing_from_spectrum",
    "density_matrix_from_json",
    "density_matrix_to_json",
    "fidelity_pure",
    "filter_operator",
    "hermitian_eig",
    "kron",
    "matrix_sqrt_psd",
    "mutual_information",
    "optimal_magnitude",
    "optimal_orientation",
    "partial_trace",
    "pauli_channel_state",
    "plan_recovery",
    "ratio_scan",
    "reconstruct",
    "record_from_json",
    "record_to_json",
    "simulate_counts",
    "standard_settings",
    "sweep",
    "sweep_to_csv",
    "sweep_to_json",
    "unitary_operator",
    "validate_density_matrix",
    "von_neumann_entropy",
]
