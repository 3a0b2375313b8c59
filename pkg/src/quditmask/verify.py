"""Certification of masking schemes: marginal checks against the
maximally mixed state, input-independence across sampled inputs, leakage
profiles for intermediate circuit states, and bound arithmetic."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .masker import MaskingScheme, mask, masking_capacity, min_parties
from .tensorcore import DensityMatrix, StateVector, partial_trace

MARGINAL_TOL = 1e-10
VARIATION_TOL = 1e-10
GRAM_TOL = 1e-11


@dataclass(frozen=True)
class CheckResult:
    value: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.value <= self.threshold


@dataclass(frozen=True)
class MaskingReport:
    """Outcome of verifying one scheme on basis inputs plus random samples."""

    w: int
    d: int
    m: int
    n_samples: int
    seed: int
    per_party_max_deviation: tuple[float, ...]
    cross_input_max_variation: tuple[float, ...]
    isometry_gram_deviation: float
    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())


@dataclass(frozen=True)
class PartyLeakage:
    party: int
    marginal: np.ndarray
    off_diagonal_leak: float
    diagonal_leak: float

    def masked(self, tol: float = MARGINAL_TOL) -> bool:
        return self.off_diagonal_leak <= tol and self.diagonal_leak <= tol


@dataclass(frozen=True)
class LeakageProfile:
    parties: tuple[PartyLeakage, ...]

    def masked_parties(self, tol: float = MARGINAL_TOL) -> tuple[int, ...]:
        return tuple(p.party for p in self.parties if p.masked(tol))


@dataclass(frozen=True)
class BoundsReport:
    d: int
    m: int
    masking_bound: int
    singleton_bound: int
    tighter: bool
    min_parties_table: tuple[tuple[int, int, bool], ...]


def haar_random_state(dim: int, rng: np.random.Generator) -> StateVector:
    """Haar-distributed pure state: normalized complex standard-normal vector."""
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector((dim,), amps / np.linalg.norm(amps))


def verify_scheme(scheme: MaskingScheme, n_samples: int = 100, seed: int = 0) -> MaskingReport:
    """Check the masking condition on all w basis inputs plus n_samples
    seeded Haar-random inputs; deterministic given (scheme, n_samples, seed)."""
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    rng = np.random.default_rng(seed)
    inputs = [_basis_input(scheme.w, k) for k in range(scheme.w)]
    inputs += [haar_random_state(scheme.w, rng) for _ in range(n_samples)]

    eye = np.eye(scheme.d) / scheme.d
    per_party_dev = [0.0] * scheme.m
    variation = [0.0] * scheme.m
    reference: list[np.ndarray | None] = [None] * scheme.m
    for state in inputs:
        masked = mask(scheme, state)
        for party in range(scheme.m):
            rho = partial_trace(masked, [party]).mat
            per_party_dev[party] = max(per_party_dev[party], float(np.max(np.abs(rho - eye))))
            if reference[party] is None:
                reference[party] = rho
            else:
                variation[party] = max(
                    variation[party], float(np.max(np.abs(rho - reference[party])))
                )
    gram_dev = scheme.gram_deviation()
    checks = {
        "marginals_maximally_mixed": CheckResult(max(per_party_dev), MARGINAL_TOL),
        "marginals_input_independent": CheckResult(max(variation), VARIATION_TOL),
        "isometry_gram": CheckResult(gram_dev, GRAM_TOL),
    }
    return MaskingReport(
        w=scheme.w,
        d=scheme.d,
        m=scheme.m,
        n_samples=n_samples,
        seed=seed,
        per_party_max_deviation=tuple(per_party_dev),
        cross_input_max_variation=tuple(variation),
        isometry_gram_deviation=gram_dev,
        checks=checks,
    )


def _basis_input(w: int, k: int) -> StateVector:
    amps = np.zeros(w, dtype=complex)
    amps[k] = 1.0
    return StateVector((w,), amps)


def leakage_profile(state: StateVector) -> LeakageProfile:
    """Per-party marginals split into off-diagonal (coherence) and diagonal
    (population) leakage relative to the maximally mixed state."""
    parties = []
    for party in range(state.n_parties):
        rho = partial_trace(state, [party]).mat
        d = rho.shape[0]
        off = rho - np.diag(np.diag(rho))
        parties.append(
            PartyLeakage(
                party=party,
                marginal=rho,
                off_diagonal_leak=float(np.max(np.abs(off))),
                diagonal_leak=float(np.max(np.abs(np.diag(rho).real - 1.0 / d))),
            )
        )
    return LeakageProfile(tuple(parties))


def bounds_report(d: int, m: int, w_list: list[int] | tuple[int, ...] = ()) -> BoundsReport:
    """Exact integer arithmetic for the masking capacity d^floor(m/2) versus
    the quantum Singleton bound d^(m-2), and a min-parties table."""
    if d < 2 or m < 4:
        raise ValueError("need d >= 2 and m >= 4")
    masking_bound = masking_capacity(d, m)
    singleton_bound = d ** (m - 2)
    table = tuple((w, min_parties(w, d), min_parties(w, d) < 4) for w in w_list)
    return BoundsReport(
        d=d,
        m=m,
        masking_bound=masking_bound,
        singleton_bound=singleton_bound,
        tighter=masking_bound <= singleton_bound,
        min_parties_table=table,
    )


def masking_report_to_json_dict(report: MaskingReport) -> dict:
    return {
        "w": report.w,
        "d": report.d,
        "m": report.m,
        "n_samples": report.n_samples,
        "seed": report.seed,
        "per_party_max_deviation": list(report.per_party_max_deviation),
        "cross_input_max_variation": list(report.cross_input_max_variation),
        "isometry_gram_deviation": report.isometry_gram_deviation,
        "checks": {
            name: {"value": c.value, "threshold": c.threshold, "passed": c.passed}
            for name, c in report.checks.items()
        },
        "passed": report.passed,
    }


def bounds_report_to_json_dict(report: BoundsReport) -> dict:
    return {
        "d": report.d,
        "m": report.m,
        "masking_bound": report.masking_bound,
        "singleton_bound": report.singleton_bound,
        "tighter": report.tighter,
        "min_parties_table": [
            {"w": w, "min_parties": p, "below_constructed_m": flag}
            for w, p, flag in report.min_parties_table
        ],
    }


def leakage_profile_to_json_dict(profile: LeakageProfile) -> dict:
    return {
        "parties": [
            {
                "party": p.party,
                "marginal": [[[float(x.real), float(x.imag)] for x in row] for row in p.marginal],
                "off_diagonal_leak": p.off_diagonal_leak,
                "diagonal_leak": p.diagonal_leak,
                "masked": p.masked(),
            }
            for p in profile.parties
        ]
    }
