import math

import numpy as np
import pytest

from entfilter.channel import PauliNoiseSpec, pauli_channel_state
from entfilter.qstate import (
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

from helpers import (
    random_bell_diagonal,
    random_density_matrix,
    random_unitary,
)

# Binary entropy of the p = 0.33 Bell mixture, from an independent scalar
# evaluation of -sum(w log2 w) over the weights {0.835, 0.165}.
ENTROPY_BF_033 = -(0.835 * math.log2(0.835) + 0.165 * math.log2(0.165))


def bitflip(p=0.33):
    return pauli_channel_state(PauliNoiseSpec.bit_flip(p))


def phaseflip(p=0.33):
    return pauli_channel_state(PauliNoiseSpec.phase_flip(p))


class TestBellState:
    def test_phi_plus_entries(self):
        rho = bell_state("phi+")
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 0.5
        assert np.array_equal(rho, expected)

    def test_psi_plus_entries(self):
        rho = bell_state("psi+")
        expected = np.zeros((4, 4), dtype=complex)
        expected[1, 1] = expected[1, 2] = expected[2, 1] = expected[2, 2] = 0.5
        assert np.array_equal(rho, expected)

    def test_phi_minus_entries(self):
        rho = bell_state("phi-")
        assert rho[0, 0] == 0.5 and rho[3, 3] == 0.5
        assert rho[0, 3] == -0.5 and rho[3, 0] == -0.5

    def test_unknown_label(self):
        with pytest.raises(ValueError, match="unknown Bell label"):
            bell_state("phi")

    def test_all_are_valid_density_matrices(self):
        for label in ("phi+", "phi-", "psi+", "psi-"):
            validate_density_matrix(bell_state(label))


class TestVonNeumannEntropy:
    def test_pure_state(self):
        assert von_neumann_entropy(bell_state("phi+")) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-12)

    def test_bitflip_mixture(self):
        s = von_neumann_entropy(bitflip())
        assert s == pytest.approx(ENTROPY_BF_033, abs=1e-12)
        assert s == pytest.approx(0.6461, abs=1e-4)

    def test_rejects_invalid_state(self):
        with pytest.raises(ValueError):
            von_neumann_entropy(np.eye(4))  # trace 4


class TestMutualInformation:
    def test_bell_state(self):
        assert mutual_information(bell_state("phi+")) == pytest.approx(2.0, abs=1e-12)

    def test_product_state(self):
        rng = np.random.default_rng(2)
        rho = np.kron(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
        assert mutual_information(rho) == pytest.approx(0.0, abs=1e-12)

    def test_bitflip_mixture(self):
        # marginals are maximally mixed, so MI = 2 - S(AB)
        assert mutual_information(bitflip()) == pytest.approx(
            2.0 - ENTROPY_BF_033, abs=1e-12
        )
        assert mutual_information(bitflip()) == pytest.approx(1.3539, abs=1e-4)

    def test_nonnegative_on_random_states(self):
        rng = np.random.default_rng(17)
        for _ in range(10_000):
            assert mutual_information(random_density_matrix(rng)) >= 0.0

    def test_invariant_under_local_unitaries(self):
        rng = np.random.default_rng(23)
        for _ in range(50):
            rho = random_density_matrix(rng)
            u = np.kron(random_unitary(rng), random_unitary(rng))
            rotated = u @ rho @ u.conj().T
            assert mutual_information(rotated) == pytest.approx(
                mutual_information(rho), abs=1e-9
            )


class TestConcurrence:
    def test_bell_state(self):
        assert concurrence(bell_state("phi+")) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert concurrence(np.eye(4) / 4) == 0.0

    def test_bitflip_mixture(self):
        # Bell-diagonal closed form: C = 2 w_max - 1 = 1 - p
        assert concurrence(bitflip(0.33)) == pytest.approx(0.67, abs=1e-12)

    def test_bell_diagonal_closed_form(self):
        rng = np.random.default_rng(29)
        for _ in range(200):
            rho = random_bell_diagonal(rng)
            w_max = max(bell_diagonal_weights(rho).values())
            assert concurrence(rho) == pytest.approx(
                max(0.0, 2 * w_max - 1), abs=1e-9
            )


class TestCorrelationMatrix:
    def test_phi_plus(self):
        t = correlation_matrix(bell_state("phi+"))
        assert np.allclose(t, np.diag([1.0, -1.0, 1.0]), atol=1e-12)

    def test_phaseflip_family(self):
        for p in (0.0, 0.2, 0.33, 0.8, 1.0):
            t = correlation_matrix(phaseflip(p))
            assert np.allclose(t, np.diag([1 - p, -(1 - p), 1.0]), atol=1e-12)

    def test_maximally_mixed(self):
        assert np.allclose(correlation_matrix(np.eye(4) / 4), np.zeros((3, 3)), atol=1e-14)

    def test_rank2_pattern_one_unit_two_concurrence(self):
        # rank-2 Bell-diagonal states carry a single |t| = 1 entry and two
        # entries of magnitude equal to the concurrence
        for p in np.linspace(0.0, 1.0, 21):
            for rho in (bitflip(p), phaseflip(p)):
                t = np.sort(np.abs(np.diag(correlation_matrix(rho))))[::-1]
                c = concurrence(rho)
                assert abs(t[0] - 1.0) < 1e-9
                assert abs(t[1] - c) < 1e-9
                assert abs(t[2] - c) < 1e-9

    def test_bell_diagonal_is_diagonal(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            t = correlation_matrix(random_bell_diagonal(rng))
            off = t - np.diag(np.diag(t))
            assert np.max(np.abs(off)) < 1e-9
            assert np.max(np.abs(t)) <= 1.0 + 1e-9


class TestBellDiagonalWeights:
    def test_bitflip_weights(self):
        w = bell_diagonal_weights(bitflip(0.33))
        assert w["phi+"] == pytest.approx(0.835, abs=1e-12)
        assert w["psi+"] == pytest.approx(0.165, abs=1e-12)
        assert abs(w["phi-"]) < 1e-12 and abs(w["psi-"]) < 1e-12

    def test_phaseflip_weights(self):
        w = bell_diagonal_weights(phaseflip(0.33))
        assert w["phi+"] == pytest.approx(0.835, abs=1e-12)
        assert w["phi-"] == pytest.approx(0.165, abs=1e-12)
        assert abs(w["psi+"]) < 1e-12 and abs(w["psi-"]) < 1e-12

    def test_pure_bell_state(self):
        w = bell_diagonal_weights(bell_state("phi+"))
        assert w["phi+"] == pytest.approx(1.0, abs=1e-12)
        assert sum(w.values()) == pytest.approx(1.0, abs=1e-9)


class TestFidelityPure:
    def test_self_fidelity(self):
        phi = bell_state("phi+")
        assert fidelity_pure(phi, phi) == pytest.approx(1.0, abs=1e-12)

    def test_bitflip_vs_phi_plus(self):
        assert fidelity_pure(bitflip(0.33), bell_state("phi+")) == pytest.approx(
            0.835, abs=1e-12
        )

    def test_maximally_mixed(self):
        assert fidelity_pure(np.eye(4) / 4, bell_state("psi-")) == pytest.approx(
            0.25, abs=1e-12
        )

    def test_rejects_mixed_target(self):
        with pytest.raises(ValueError, match="pure"):
            fidelity_pure(bell_state("phi+"), np.eye(4) / 4)


class TestJsonFormat:
    def test_round_trip_4x4(self):
        rng = np.random.default_rng(37)
        rho = random_density_matrix(rng)
        obj = density_matrix_to_json(rho)
        assert obj["basis"] == ["HH", "HV", "VH", "VV"]
        back = density_matrix_from_json(obj)
        assert np.allclose(back, rho, atol=1e-15)

    def test_round_trip_2x2(self):
        rng = np.random.default_rng(41)
        rho = random_density_matrix(rng, dim=2)
        obj = density_matrix_to_json(rho)
        assert obj["basis"] == ["H", "V"]
        assert np.allclose(density_matrix_from_json(obj), rho, atol=1e-15)

    def test_entries_are_re_im_pairs(self):
        obj = density_matrix_to_json(bell_state("phi+"))
        assert obj["matrix"][0][3] == [0.5, 0.0]

    def test_rejects_bad_basis(self):
        obj = density_matrix_to_json(bell_state("phi+"))
        obj["basis"] = ["HH", "VH", "HV", "VV"]
        with pytest.raises(ValueError, match="basis"):
            density_matrix_from_json(obj)
