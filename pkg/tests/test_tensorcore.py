import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditmask import (
    ShapeError,
    StateVector,
    basis_state,
    density_of,
    distance_to_maximally_mixed,
    inner_product,
    partial_trace,
    tensor_product,
)
from oracles import partial_trace_oracle, state_from_kets, two_qudit_meb_state_oracle

BELL = StateVector((2, 2), np.array([1, 0, 0, 1]) / np.sqrt(2))


def random_state(dims, rng):
    amps = rng.standard_normal(int(np.prod(dims))) + 1j * rng.standard_normal(int(np.prod(dims)))
    return StateVector(tuple(dims), amps / np.linalg.norm(amps))


class TestStateVector:
    def test_rejects_dimension_one_party(self):
        with pytest.raises(ValueError):
            StateVector((2, 1), np.zeros(2))

    def test_rejects_wrong_amplitude_length(self):
        with pytest.raises(ShapeError):
            StateVector((2, 2), np.zeros(3))

    def test_amplitudes_read_only(self):
        with pytest.raises(ValueError):
            BELL.amps[0] = 2.0

    def test_basis_state(self):
        st_ = basis_state((2, 3), (1, 2))
        assert st_.amps[5] == 1.0
        assert np.count_nonzero(st_.amps) == 1


class TestTensorProduct:
    def test_basis_kets(self):
        zero = basis_state((2,), (0,))
        out = tensor_product(zero, zero)
        assert np.allclose(out.amps, [1, 0, 0, 0])
        assert out.dims == (2, 2)

    def test_bell_pair_of_bell_pairs(self):
        out = tensor_product(BELL, BELL)
        expected = state_from_kets(
            {"0000": 0.5, "0011": 0.5, "1100": 0.5, "1111": 0.5}, (2, 2, 2, 2)
        )
        assert np.allclose(out.amps, expected, atol=1e-15)

    @given(st.integers(0, 2 ** 31 - 1))
    @settings(max_examples=25, deadline=None)
    def test_norm_multiplies(self, seed):
        rng = np.random.default_rng(seed)
        a = StateVector((3,), rng.standard_normal(3) + 1j * rng.standard_normal(3))
        b = StateVector((2, 2), rng.standard_normal(4) + 1j * rng.standard_normal(4))
        out = tensor_product(a, b)
        assert np.isclose(out.norm(), a.norm() * b.norm(), atol=1e-12)


class TestInnerProduct:
    def test_orthogonal_basis_states(self):
        zero, one = basis_state((2,), (0,)), basis_state((2,), (1,))
        assert inner_product(zero, one) == 0

    def test_meb_elements_orthogonal_at_d3(self):
        # expected value from the direct formula evaluation
        psi0 = StateVector((3, 3), two_qudit_meb_state_oracle(3, 0))
        psi1 = StateVector((3, 3), two_qudit_meb_state_oracle(3, 1))
        assert abs(inner_product(psi0, psi1)) <= 1e-13

    def test_normalized_self_product(self):
        rng = np.random.default_rng(7)
        psi = random_state((2, 3), rng)
        assert np.isclose(inner_product(psi, psi), 1.0, atol=1e-12)

    @given(st.integers(0, 2 ** 31 - 1))
    @settings(max_examples=25, deadline=None)
    def test_conjugate_symmetry(self, seed):
        rng = np.random.default_rng(seed)
        a, b = random_state((2, 2), rng), random_state((2, 2), rng)
        assert np.isclose(inner_product(a, b), np.conj(inner_product(b, a)), atol=1e-14)

    def test_dims_mismatch(self):
        with pytest.raises(ShapeError):
            inner_product(basis_state((2,), (0,)), basis_state((3,), (0,)))


class TestDensityOf:
    def test_basis_state_projector(self):
        rho = density_of(basis_state((2,), (0,)))
        assert np.allclose(rho.mat, np.diag([1.0, 0.0]))

    def test_plus_state(self):
        plus = StateVector((2,), np.array([1, 1]) / np.sqrt(2))
        assert np.allclose(density_of(plus).mat, np.full((2, 2), 0.5))

    def test_pure_state_purity(self):
        rng = np.random.default_rng(3)
        for dims in [(2,), (2, 3), (4, 2)]:
            rho = density_of(random_state(dims, rng))
            assert np.isclose(rho.purity(), 1.0, atol=1e-12)
            assert np.isclose(rho.trace(), 1.0, atol=1e-12)


class TestPartialTrace:
    def test_bell_pair_pair_marginal_is_maximally_mixed(self):
        psi = tensor_product(BELL, BELL)
        rho = partial_trace(psi, [0])
        assert np.allclose(rho.mat, np.eye(2) / 2, atol=1e-14)

    def test_post_copy_state_marginal_diagonal(self):
        # party-0 marginal of a_0|0000> + a_1|1010> + a_2|0100> + a_3|1110>
        a = np.array([0.1, 0.5, 0.7, 0.3], dtype=complex)
        a /= np.linalg.norm(a)
        psi = StateVector(
            (2, 2, 2, 2),
            state_from_kets({"0000": a[0], "1010": a[1], "0100": a[2], "1110": a[3]}, (2, 2, 2, 2)),
        )
        rho = partial_trace(psi, [0]).mat
        expected = np.diag([abs(a[0]) ** 2 + abs(a[2]) ** 2, abs(a[1]) ** 2 + abs(a[3]) ** 2])
        assert np.allclose(rho, expected, atol=1e-14)

    def test_two_party_encoded_state_off_diagonal(self):
        a = np.array([0.4 + 0.1j, 0.3, 0.6 - 0.2j, 0.2j])
        a /= np.linalg.norm(a)
        psi = StateVector(
            (2, 2), state_from_kets({"00": a[0], "10": a[1], "01": a[2], "11": a[3]}, (2, 2))
        )
        rho = partial_trace(psi, [1]).mat
        off = a[0] * np.conj(a[2]) + a[1] * np.conj(a[3])
        expected = np.array(
            [
                [abs(a[0]) ** 2 + abs(a[1]) ** 2, off],
                [np.conj(off), abs(a[2]) ** 2 + abs(a[3]) ** 2],
            ]
        )
        assert np.allclose(rho, expected, atol=1e-14)

    def test_empty_keep_set_rejected(self):
        with pytest.raises(ValueError):
            partial_trace(BELL, [])

    def test_out_of_range_keep_rejected(self):
        with pytest.raises(ValueError):
            partial_trace(BELL, [5])

    @pytest.mark.parametrize(
        "dims", [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 4), (4, 4, 4), (2, 2, 2, 2, 2), (4, 4, 4, 4)]
    )
    def test_matches_block_summation_oracle(self, dims):
        rng = np.random.default_rng(sum(dims))
        psi = random_state(dims, rng)
        for keep in [[0], [len(dims) - 1], list(range(len(dims) - 1)), [0, len(dims) - 1]]:
            keep = sorted(set(keep))
            got = partial_trace(psi, keep).mat
            want = partial_trace_oracle(psi.amps, psi.dims, keep)
            assert np.max(np.abs(got - want)) <= 1e-13

    @pytest.mark.parametrize("dims", [(2, 2), (3, 2, 2), (2, 3, 4)])
    def test_trace_preserved(self, dims):
        rng = np.random.default_rng(11)
        amps = rng.standard_normal(int(np.prod(dims))) + 1j * rng.standard_normal(int(np.prod(dims)))
        psi = StateVector(dims, amps)  # deliberately unnormalized
        for party in range(len(dims)):
            rho = partial_trace(psi, [party])
            assert np.isclose(rho.trace(), psi.norm() ** 2, atol=1e-12 * psi.norm() ** 2)

    def test_product_state_marginal_factorizes(self):
        rng = np.random.default_rng(5)
        psi = random_state((2, 3), rng)
        phi = StateVector((2, 2), 0.5 * random_state((2, 2), rng).amps)
        joint = tensor_product(psi, phi)
        for party in range(2):
            lhs = partial_trace(joint, [party]).mat
            rhs = partial_trace(psi, [party]).mat * (phi.norm() ** 2)
            assert np.max(np.abs(lhs - rhs)) <= 1e-12


class TestDistanceToMaximallyMixed:
    def test_maximally_mixed_is_zero(self):
        assert distance_to_maximally_mixed(partial_trace(BELL, [0])) == pytest.approx(0, abs=1e-15)

    def test_pure_marginal(self):
        rho = density_of(basis_state((2,), (0,)))
        assert distance_to_maximally_mixed(rho) == pytest.approx(0.5)

    def test_meb_marginals_at_d4(self):
        # every element of the 2-qudit family at d=4 has I/4 marginals
        for k in range(16):
            psi = StateVector((4, 4), two_qudit_meb_state_oracle(4, k))
            for party in (0, 1):
                assert distance_to_maximally_mixed(partial_trace(psi, [party])) <= 1e-12
