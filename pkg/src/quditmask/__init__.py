"""Multipartite quantum information masking: maximally entangled bases,
qudit masking circuits, and numerical certification of the masking
condition."""

from .gates import (
    Circuit,
    Gate,
    append_ancilla,
    apply,
    apply_gate,
    circuit_from_text,
    circuit_to_text,
    controlled_power_gate,
    fourier_gate,
    relabel_gate,
    shift_gate,
)
from .masker import (
    BoundViolationError,
    MaskingScheme,
    build_scheme,
    circuit_mask,
    digit_encode,
    example1_scheme,
    example2_scheme,
    mask,
    masking_capacity,
    min_parties,
    qubit4_circuit,
    qudit4_circuit,
    scheme_to_json_dict,
)
from .meb import MebCertification, MebFamily, certify_meb, ghz_basis, meb_to_json_dict, two_qudit_meb
from .tensorcore import (
    DensityMatrix,
    ShapeError,
    StateVector,
    basis_state,
    density_of,
    distance_to_maximally_mixed,
    inner_product,
    partial_trace,
    tensor_product,
)
from .verify import (
    BoundsReport,
    LeakageProfile,
    MaskingReport,
    bounds_report,
    haar_random_state,
    leakage_profile,
    verify_scheme,
)

__all__ = [
    "BoundViolationError",
    "BoundsReport",
    "Circuit",
    "DensityMatrix",
    "Gate",
    "LeakageProfile",
    "MaskingReport",
    "MaskingScheme",
    "MebCertification",
    "MebFamily",
    "ShapeError",
    "StateVector",
    "append_ancilla",
    "apply",
    "apply_gate",
    "basis_state",
    "bounds_report",
    "build_scheme",
    "certify_meb",
    "circuit_from_text",
    "circuit_mask",
    "circuit_to_text",
    "controlled_power_gate",
    "density_of",
    "digit_encode",
    "distance_to_maximally_mixed",
    "example1_scheme",
    "example2_scheme",
    "fourier_gate",
    "ghz_basis",
    "haar_random_state",
    "inner_product",
    "leakage_profile",
    "mask",
    "masking_capacity",
    "meb_to_json_dict",
    "min_parties",
    "partial_trace",
    "qubit4_circuit",
    "qudit4_circuit",
    "relabel_gate",
    "scheme_to_json_dict",
    "shift_gate",
    "tensor_product",
    "two_qudit_meb",
    "verify_scheme",
]

__version__ = "0.1.0"
