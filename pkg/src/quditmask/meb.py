"""Maximum entangled bases: orthonormal multi-qudit bases whose every
single-party reduction is maximally mixed."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensorcore import StateVector, distance_to_maximally_mixed, partial_trace

GRAM_TOL = 1e-11
MARGINAL_TOL = 1e-11


@dataclass(frozen=True)
class MebFamily:
    """An ordered family of n-qudit states intended as a maximum entangled basis."""

    d: int
    n_parties: int
    states: tuple[StateVector, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        states = tuple(self.states)
        dims = (self.d,) * self.n_parties
        for s in states:
            if s.dims != dims:
                raise ValueError(f"state dims {s.dims} != {dims}")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "labels", tuple(self.labels))


@dataclass(frozen=True)
class MebCertification:
    orthonormal: bool
    marginals_maximally_mixed: bool
    complete: bool
    max_gram_deviation: float
    max_marginal_deviation: float
    count: int
    expected_count: int

    @property
    def passed(self) -> bool:
        return self.orthonormal and self.marginals_maximally_mixed and self.complete


def two_qudit_meb(d: int) -> MebFamily:
    """The d^2-element 2-qudit family
    |psi_k> = (1/sqrt d) sum_j w^{j(k mod d)} |j>|(j + floor(k/d)) mod d>,
    the four Bell states at d=2.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    omega = np.exp(2j * np.pi / d)
    states = []
    for k in range(d * d):
        s, t = k % d, k // d
        amps = np.zeros(d * d, dtype=complex)
        for j in range(d):
            amps[j * d + (j + t) % d] = omega ** (j * s) / np.sqrt(d)
        states.append(StateVector((d, d), amps))
    return MebFamily(d, 2, tuple(states), tuple(range(d * d)))


def ghz_basis(d: int, n_parties: int) -> MebFamily:
    """GHZ-type basis of (C^d)^(x n): states labeled by (s, t_1..t_{n-1}),
    |g> = (1/sqrt d) sum_j w^{js} |j, (j+t_1) mod d, ..., (j+t_{n-1}) mod d>.

    Labels are lexicographic with s slowest: k = s*d^(n-1) + (t as a
    big-endian base-d number). Coincides with two_qudit_meb(d) as a set at
    n = 2.
    """
    if d < 2 or n_parties < 2:
        raise ValueError("need d >= 2 and n_parties >= 2")
    omega = np.exp(2j * np.pi / d)
    dim = d ** n_parties
    states = []
    for k in range(dim):
        digits = _base_d_digits(k, d, n_parties)
        s, shifts = digits[0], digits[1:]
        amps = np.zeros(dim, dtype=complex)
        for j in range(d):
            idx = j
            for t in shifts:
                idx = idx * d + (j + t) % d
            amps[idx] = omega ** (j * s) / np.sqrt(d)
        states.append(StateVector((d,) * n_parties, amps))
    return MebFamily(d, n_parties, tuple(states), tuple(range(dim)))


def _base_d_digits(k: int, d: int, width: int) -> list[int]:
    digits = []
    for _ in range(width):
        digits.append(k % d)
        k //= d
    return digits[::-1]


def certify_meb(family: MebFamily) -> MebCertification:
    """Check orthonormality, single-party maximal mixedness, and completeness."""
    mat = np.array([s.amps for s in family.states])
    gram_dev = 0.0
    if len(family.states) > 0:
        gram = mat.conj() @ mat.T
        gram_dev = float(np.max(np.abs(gram - np.eye(len(family.states)))))
    marg_dev = 0.0
    for s in family.states:
        for party in range(family.n_parties):
            marg_dev = max(marg_dev, distance_to_maximally_mixed(partial_trace(s, [party])))
    expected = family.d ** family.n_parties
    return MebCertification(
        orthonormal=gram_dev <= GRAM_TOL,
        marginals_maximally_mixed=marg_dev <= MARGINAL_TOL,
        complete=len(family.states) == expected,
        max_gram_deviation=gram_dev,
        max_marginal_deviation=marg_dev,
        count=len(family.states),
        expected_count=expected,
    )


def meb_to_json_dict(family: MebFamily) -> dict:
    """JSON-ready document {d, n_parties, labels, states: [[re, im], ...]}."""
    return {
        "d": family.d,
        "n_parties": family.n_parties,
        "labels": list(family.labels),
        "states": [[[float(a.real), float(a.imag)] for a in s.amps] for s in family.states],
    }
