"""Masking schemes: isometric column maps k -> |Psi_k> onto multi-qudit
registers, and their realization as controlled-gate circuits for four
parties."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gates import Circuit, apply, append_ancilla, controlled_power_gate, fourier_gate
from .meb import ghz_basis, two_qudit_meb
from .tensorcore import ShapeError, StateVector, tensor_product

GRAM_TOL = 1e-11


class BoundViolationError(ValueError):
    """Requested input level count exceeds the masking capacity d^floor(m/2)."""


@dataclass(frozen=True)
class MaskingScheme:
    """Ordered list of w orthonormal m-party image states over (C^d)^(x m)."""

    w: int
    d: int
    m: int
    images: tuple[StateVector, ...]
    provenance: str = "custom"

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.w:
            raise ValueError(f"expected {self.w} images, got {len(images)}")
        dims = (self.d,) * self.m
        for im in images:
            if im.dims != dims:
                raise ValueError(f"image dims {im.dims} != {dims}")
        if self.w > self.d ** (self.m // 2):
            raise BoundViolationError(
                f"w={self.w} exceeds the masking capacity d^floor(m/2) = {self.d ** (self.m // 2)}"
            )
        object.__setattr__(self, "images", images)

    def gram_deviation(self) -> float:
        mat = np.array([im.amps for im in self.images])
        return float(np.max(np.abs(mat.conj() @ mat.T - np.eye(self.w))))


def masking_capacity(d: int, m: int) -> int:
    """Largest maskable level count for an m-party register of qudits: d^floor(m/2)."""
    return d ** (m // 2)


def build_scheme(w: int, d: int, m: int, provenance: str | None = None) -> MaskingScheme:
    """Mask a w-level system into m parties of dimension d.

    The register is split into halves of floor(m/2) and ceil(m/2) parties;
    image k is the tensor product of the k-th GHZ-type basis elements of
    the two halves (the 2-qudit family ordering for m = 4, which
    reproduces the Bell-pair scheme at d = 2).
    """
    if w < 2 or d < 2:
        raise ValueError("need w >= 2 and d >= 2")
    if m < 4:
        raise ValueError("only m >= 4 party registers are constructed")
    if w > masking_capacity(d, m):
        raise BoundViolationError(
            f"w={w} exceeds the masking capacity d^floor(m/2) = {masking_capacity(d, m)} "
            f"for d={d}, m={m}"
        )
    if m == 4:
        left = right = two_qudit_meb(d)
    else:
        left = ghz_basis(d, m // 2)
        right = ghz_basis(d, (m + 1) // 2)
    images = tuple(tensor_product(left.states[k], right.states[k]) for k in range(w))
    if provenance is None:
        provenance = {
            (4, 2, 4): "example1",
            (8, 2, 6): "example2",
        }.get((w, d, m), "theorem1" if m == 4 and w == d * d else "theorem2")
    return MaskingScheme(w, d, m, images, provenance)


def example1_scheme() -> MaskingScheme:
    """C^4 into four qubits via Bell pairs."""
    return build_scheme(4, 2, 4)


def example2_scheme() -> MaskingScheme:
    """C^8 into six qubits via 3-qubit GHZ pairs."""
    return build_scheme(8, 2, 6)


def mask(scheme: MaskingScheme, state: StateVector) -> StateVector:
    """Apply the column map: sum_k a_k |k>  ->  sum_k a_k images[k]."""
    if state.dims != (scheme.w,):
        raise ShapeError(f"input must be a single party of dimension {scheme.w}, got dims {state.dims}")
    out = np.zeros(scheme.d ** scheme.m, dtype=complex)
    for a, image in zip(state.amps, scheme.images):
        out += a * image.amps
    return StateVector((scheme.d,) * scheme.m, out)


def digit_encode(state: StateVector, d: int) -> StateVector:
    """Write a w-level input (w <= d^2) into two d-level parties:
    |k> -> |k mod d>|floor(k/d)>."""
    (w,) = state.dims
    if w > d * d:
        raise ShapeError(f"cannot encode {w} levels into two parties of dimension {d}")
    out = np.zeros(d * d, dtype=complex)
    for k, a in enumerate(state.amps):
        out[(k % d) * d + k // d] = a
    return StateVector((d, d), out)


def qubit4_circuit() -> Circuit:
    """The four-step 4-qubit masking circuit, acting on the digit-encoded
    input extended by two |0> ancillas."""
    return Circuit(
        (2, 2, 2, 2),
        (
            controlled_power_gate(2, 0, 2),
            controlled_power_gate(2, 1, 3),
            fourier_gate(2, 0),
            controlled_power_gate(2, 0, 1),
            fourier_gate(2, 2),
            controlled_power_gate(2, 2, 3),
        ),
    )


def qudit4_circuit(d: int) -> Circuit:
    """Qudit generalization of the 4-party circuit: two copying controlled
    shifts, Fourier on parties 0 and 2, then two phase-spreading controlled
    shifts."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return Circuit(
        (d, d, d, d),
        (
            controlled_power_gate(d, 0, 2),
            controlled_power_gate(d, 1, 3),
            fourier_gate(d, 0),
            fourier_gate(d, 2),
            controlled_power_gate(d, 0, 1),
            controlled_power_gate(d, 2, 3),
        ),
    )


def circuit_mask(d: int, state: StateVector) -> StateVector:
    """Run the 4-party circuit route: digit-encode, add two ancillas, apply."""
    encoded = append_ancilla(digit_encode(state, d), d, 2)
    return apply(qudit4_circuit(d), encoded)


def min_parties(w: int, d: int) -> int:
    """Smallest register size the constructions call for: 2*ceil(log_d w),
    computed in exact integer arithmetic."""
    if w < 2 or d < 2:
        raise ValueError("need w >= 2 and d >= 2")
    t, power = 0, 1
    while power < w:
        power *= d
        t += 1
    return 2 * t


def scheme_to_json_dict(scheme: MaskingScheme) -> dict:
    """JSON-ready document {w, d, m, provenance, images}."""
    return {
        "w": scheme.w,
        "d": scheme.d,
        "m": scheme.m,
        "provenance": scheme.provenance,
        "images": [[[float(a.real), float(a.imag)] for a in im.amps] for im in scheme.images],
    }
