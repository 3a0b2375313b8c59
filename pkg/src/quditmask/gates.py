"""Qudit gate constructors and circuit application.

Gates are applied by index arithmetic on the amplitude tensor (rolls and
small per-axis contractions); full register matrices are never
materialized. `Gate.matrix()` returns the dense local realization for
inspection and testing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tensorcore import ShapeError, StateVector

SHIFT = "shift"
FOURIER = "fourier"
CPOW = "cpow"
RELABEL = "relabel"


@dataclass(frozen=True)
class Gate:
    """One gate of a qudit circuit.

    kind: "shift" (cyclic X^power on one party), "fourier" (discrete
    Fourier transform on one party), "cpow" (|j><j| (x) U^j on a
    control/target pair), or "relabel" (basis permutation of the whole
    register).
    parties: target party indices; (control, target) for cpow, empty for
    relabel.
    """

    kind: str
    d: int
    parties: tuple[int, ...]
    power: int = 0
    permutation: tuple[int, ...] = field(default=())

    def matrix(self) -> np.ndarray:
        """Dense unitary acting on the gate's own parties."""
        d = self.d
        if self.kind == SHIFT:
            u = np.zeros((d, d), dtype=complex)
            for j in range(d):
                u[(j + self.power) % d, j] = 1.0
            return u
        if self.kind == FOURIER:
            j = np.arange(d)
            return np.exp(2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)
        if self.kind == CPOW:
            shift = shift_gate(d, 1, 0).matrix()
            out = np.zeros((d * d, d * d), dtype=complex)
            for j in range(d):
                out[j * d:(j + 1) * d, j * d:(j + 1) * d] = np.linalg.matrix_power(shift, j)
            return out
        if self.kind == RELABEL:
            n = len(self.permutation)
            out = np.zeros((n, n), dtype=complex)
            for src, dst in enumerate(self.permutation):
                out[dst, src] = 1.0
            return out
        raise ValueError(f"unknown gate kind {self.kind!r}")


def shift_gate(d: int, power: int, party: int) -> Gate:
    """Cyclic shift |j> -> |(j+power) mod d| on one party."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return Gate(SHIFT, d, (party,), power=power % d)


def fourier_gate(d: int, party: int) -> Gate:
    """Discrete Fourier gate F|j> = (1/sqrt d) sum_l w^{jl} |l>, the Hadamard at d=2."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return Gate(FOURIER, d, (party,))


def controlled_power_gate(d: int, control: int, target: int) -> Gate:
    """|j>|t> -> |j>|(t+j) mod d>; the C-NOT at d=2."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if control == target:
        raise ValueError("control and target must differ")
    return Gate(CPOW, d, (control, target))


def relabel_gate(permutation: list[int] | tuple[int, ...]) -> Gate:
    """Basis relabeling |k> -> |permutation[k]> of the whole register."""
    perm = tuple(int(p) for p in permutation)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("not a permutation")
    return Gate(RELABEL, len(perm), (), permutation=perm)


@dataclass(frozen=True)
class Circuit:
    dims: tuple[int, ...]
    gates: tuple[Gate, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        gates = tuple(self.gates)
        for g in gates:
            _check_gate(g, dims)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "gates", gates)


def _check_gate(gate: Gate, dims: tuple[int, ...]):
    if gate.kind == RELABEL:
        if len(gate.permutation) != int(np.prod(dims)):
            raise ShapeError("relabel permutation length != register dimension")
        return
    for p in gate.parties:
        if not 0 <= p < len(dims):
            raise ShapeError(f"party {p} out of range for {len(dims)} parties")
        if dims[p] != gate.d:
            raise ShapeError(f"gate dimension {gate.d} != party {p} dimension {dims[p]}")


def apply_gate(gate: Gate, state: StateVector) -> StateVector:
    """Apply one gate by index arithmetic on the amplitude tensor."""
    _check_gate(gate, state.dims)
    if gate.kind == RELABEL:
        out = np.empty_like(state.amps)
        out[list(gate.permutation)] = state.amps
        return StateVector(state.dims, out)
    arr = state.tensor()
    if gate.kind == SHIFT:
        arr = np.roll(arr, gate.power, axis=gate.parties[0])
    elif gate.kind == FOURIER:
        p = gate.parties[0]
        arr = np.moveaxis(np.tensordot(gate_fourier_matrix(gate.d), arr, axes=([1], [p])), 0, p)
    elif gate.kind == CPOW:
        c, t = gate.parties
        arr = arr.copy()
        idx = [slice(None)] * len(state.dims)
        for j in range(1, gate.d):
            idx[c] = j
            arr[tuple(idx)] = np.roll(arr[tuple(idx)], j, axis=t if t < c else t - 1)
    else:
        raise ValueError(f"unknown gate kind {gate.kind!r}")
    return StateVector(state.dims, arr.reshape(-1))


def gate_fourier_matrix(d: int) -> np.ndarray:
    j = np.arange(d)
    return np.exp(2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)


def apply(circuit: Circuit, state: StateVector) -> StateVector:
    """Run the circuit's gates in list order."""
    if state.dims != circuit.dims:
        raise ShapeError(f"state dims {state.dims} != circuit dims {circuit.dims}")
    for g in circuit.gates:
        state = apply_gate(g, state)
    return state


def append_ancilla(state: StateVector, d: int, count: int) -> StateVector:
    """Extend the register by `count` ancilla parties of dimension d in |0>."""
    if d < 2 or count < 1:
        raise ValueError("need d >= 2 and count >= 1")
    anc = np.zeros(d ** count, dtype=complex)
    anc[0] = 1.0
    return StateVector(state.dims + (d,) * count, np.kron(state.amps, anc))


def circuit_to_text(circuit: Circuit) -> str:
    """Line-oriented serialization: one gate per line, 0-based parties."""
    lines = []
    for g in circuit.gates:
        if g.kind == CPOW:
            lines.append(f"CPOW d={g.d} c={g.parties[0]} t={g.parties[1]}")
        elif g.kind == FOURIER:
            lines.append(f"F d={g.d} p={g.parties[0]}")
        elif g.kind == SHIFT:
            lines.append(f"X^k d={g.d} p={g.parties[0]} k={g.power}")
        else:
            raise ValueError(f"gate kind {g.kind!r} has no text form")
    return "\n".join(lines) + ("\n" if lines else "")


def circuit_from_text(text: str, dims: list[int] | tuple[int, ...]) -> Circuit:
    """Parse the text format produced by circuit_to_text."""
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            op, kv = fields[0], dict(f.split("=", 1) for f in fields[1:])
            if op == "CPOW":
                gates.append(controlled_power_gate(int(kv["d"]), int(kv["c"]), int(kv["t"])))
            elif op == "F":
                gates.append(fourier_gate(int(kv["d"]), int(kv["p"])))
            elif op == "X^k":
                gates.append(shift_gate(int(kv["d"]), int(kv["k"]), int(kv["p"])))
            else:
                raise ValueError(f"unknown gate {op!r}")
        except (KeyError, ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: cannot parse {line!r}: {exc}") from exc
    return Circuit(tuple(dims), tuple(gates))
