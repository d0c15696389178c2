import numpy as np
import pytest

from jcdiscord.jcm import (
    GROUND,
    ModelParams,
    dressed_eigensystem,
    ground_energy,
    hamiltonian_matrix,
    level_energy,
    mixing_angle,
    rabi_frequency,
    transition_frequency,
)


class TestModelParams:
    def test_omega_f_follows_detuning(self):
        params = ModelParams(g=0.1, delta=0.25)
        assert params.omega_f == pytest.approx(0.75)

    def test_zero_coupling_rejected(self):
        with pytest.raises(ValueError, match="degenerate"):
            ModelParams(g=0.0)

    def test_negative_gamma_rejected(self):
        with pytest.raises(ValueError, match="gamma"):
            ModelParams(g=0.1, gamma=-0.5)

    def test_strong_coupling_warns_but_constructs(self):
        with pytest.warns(UserWarning, match="rotating-wave"):
            params = ModelParams(g=0.5)
        assert params.g == 0.5

    def test_weak_coupling_is_silent(self, recwarn):
        ModelParams(g=0.1)
        assert not recwarn.list


class TestRabiFrequency:
    def test_resonant_vacuum(self):
        assert rabi_frequency(0, ModelParams(g=0.1)) == pytest.approx(0.1)

    def test_detuned_n1(self):
        # sqrt((0.2/2)^2 + 0.1^2 * 2) = sqrt(0.03)
        params = ModelParams(g=0.1, delta=0.2)
        assert rabi_frequency(1, params) == pytest.approx(np.sqrt(0.03), abs=1e-12)

    def test_detuned_vacuum(self):
        # sqrt(0.09 + 0.01) = sqrt(0.10)
        params = ModelParams(g=0.1, delta=0.6)
        assert rabi_frequency(0, params) == pytest.approx(np.sqrt(0.10), abs=1e-12)

    def test_vectorised(self):
        params = ModelParams(g=0.1, delta=0.2)
        n = np.arange(4)
        np.testing.assert_allclose(
            rabi_frequency(n, params), [rabi_frequency(int(i), params) for i in n]
        )

    def test_resonance_closed_form(self):
        params = ModelParams(g=0.07)
        for n in range(5):
            assert rabi_frequency(n, params) == pytest.approx(0.07 * np.sqrt(n + 1), abs=1e-15)

    def test_lower_bound(self):
        for delta in (-0.7, 0.0, 0.4):
            params = ModelParams(g=0.1, delta=delta)
            for n in range(4):
                bound = 0.1 * np.sqrt(n + 1)
                assert rabi_frequency(n, params) >= bound
                if delta == 0.0:
                    assert rabi_frequency(n, params) == pytest.approx(bound)

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            rabi_frequency(-1, ModelParams(g=0.1))


class TestMixingAngle:
    def test_resonance_is_pi_over_four(self):
        params = ModelParams(g=0.1)
        for n in range(6):
            assert mixing_angle(n, params) == pytest.approx(np.pi / 4, abs=1e-15)

    def test_detuned_vacuum_value(self):
        # tan(theta) = 0.2 / (-0.2 + 2 sqrt(0.02)) = 1 + sqrt(2), i.e. 3 pi / 8
        params = ModelParams(g=0.1, delta=0.2)
        theta = mixing_angle(0, params)
        assert theta == pytest.approx(3.0 * np.pi / 8.0, abs=1e-12)
        assert np.tan(theta) == pytest.approx(1.0 + np.sqrt(2.0), abs=1e-10)

    def test_asymptotics_in_detuning(self):
        far_red = mixing_angle(0, ModelParams(g=0.1, delta=-80.0))
        far_blue = mixing_angle(0, ModelParams(g=0.1, delta=80.0))
        assert 0.0 < far_red < 0.01
        assert np.pi / 2 - 0.01 < far_blue < np.pi / 2

    def test_always_strictly_inside_first_quadrant(self):
        for delta in (-5.0, -0.3, 0.0, 0.3, 5.0):
            params = ModelParams(g=0.05, delta=delta)
            for n in range(8):
                assert 0.0 < mixing_angle(n, params) < np.pi / 2


class TestDressedEigensystem:
    def test_resonant_vacuum_energies(self):
        man = dressed_eigensystem(0, ModelParams(g=0.1))
        assert man.e_plus == pytest.approx(0.6)
        assert man.e_minus == pytest.approx(0.4)

    def test_ground_energy(self):
        assert ground_energy(ModelParams(g=0.1)) == pytest.approx(-0.5)

    def test_resonant_vectors(self):
        man = dressed_eigensystem(0, ModelParams(g=0.1))
        np.testing.assert_allclose(man.ket_plus, [1, 1] / np.sqrt(2), atol=1e-15)
        np.testing.assert_allclose(man.ket_minus, [1, -1] / np.sqrt(2), atol=1e-15)

    def test_vectors_orthonormal(self):
        for delta in (-0.4, 0.0, 0.7):
            man = dressed_eigensystem(2, ModelParams(g=0.1, delta=delta))
            assert abs(np.dot(man.ket_plus, man.ket_plus) - 1.0) <= 1e-14
            assert abs(np.dot(man.ket_minus, man.ket_minus) - 1.0) <= 1e-14
            assert abs(np.dot(man.ket_plus, man.ket_minus)) <= 1e-14

    def test_energy_sum_and_splitting(self):
        params = ModelParams(g=0.1, delta=0.3)
        for n in range(5):
            man = dressed_eigensystem(n, params)
            assert man.e_plus + man.e_minus == pytest.approx(
                2.0 * params.omega_f * (n + 0.5), abs=1e-14
            )
            assert man.e_plus - man.e_minus == pytest.approx(2.0 * man.rabi, abs=1e-14)


class TestTransitionFrequency:
    def test_same_level_is_zero(self):
        params = ModelParams(g=0.1, delta=0.2)
        for n in range(4):
            assert transition_frequency(n, n, "+", "+", params) == 0.0
            assert transition_frequency(n, n, "-", "-", params) == 0.0

    def test_ground_referenced_value(self):
        # omega_a = omega_f = 1, g = 0.1: E_+^(0) - E_0 = 0.6 + 0.5
        params = ModelParams(g=0.1, delta=0.0)
        assert transition_frequency(0, 0, "+", GROUND, params) == pytest.approx(1.1)

    def test_antisymmetry(self):
        params = ModelParams(g=0.1, delta=0.4)
        for (n, a) in ((0, "+"), (1, "-"), (2, "+")):
            for (m, b) in ((0, "-"), (2, "+")):
                assert transition_frequency(n, m, a, b, params) == pytest.approx(
                    -transition_frequency(m, n, b, a, params), abs=1e-15
                )

    def test_unknown_branch_rejected(self):
        with pytest.raises(ValueError, match="branch"):
            level_energy("x", 0, ModelParams(g=0.1))


class TestHamiltonianMatrix:
    def test_coupling_matrix_element(self):
        ham = hamiltonian_matrix(ModelParams(g=0.1), 4)
        assert ham[0, 5] == pytest.approx(0.1)  # <e,0|H|g,1>
        assert ham[1, 6] == pytest.approx(0.1 * np.sqrt(2.0))

    def test_exactly_hermitian(self):
        ham = hamiltonian_matrix(ModelParams(g=0.1, delta=0.3), 6)
        assert np.abs(ham - ham.conj().T).max() == 0.0

    def test_commutes_with_excitation_number(self):
        n_field = 7
        params = ModelParams(g=0.1, delta=0.2)
        ham = hamiltonian_matrix(params, n_field)
        levels = np.arange(n_field, dtype=float)
        number_op = np.diag(np.concatenate([levels + 0.5, levels - 0.5]))
        assert np.abs(ham @ number_op - number_op @ ham).max() == 0.0

    def test_spectrum_matches_dressed_manifolds(self):
        n_field = 8
        params = ModelParams(g=0.1, delta=0.2)
        ham = hamiltonian_matrix(params, n_field)
        expected = [ground_energy(params)]
        for n in range(n_field - 1):
            man = dressed_eigensystem(n, params)
            expected += [man.e_plus, man.e_minus]
        expected.append(0.5 * params.omega_a + (n_field - 1) * params.omega_f)
        np.testing.assert_allclose(
            np.sort(np.linalg.eigvalsh(ham)), np.sort(expected), atol=1e-12
        )

    def test_dressed_vectors_diagonalise_manifold_blocks(self):
        params = ModelParams(g=0.1, delta=0.4)
        n_field = 5
        ham = hamiltonian_matrix(params, n_field)
        for n in range(n_field - 1):
            idx = [n, n_field + n + 1]  # |e,n>, |g,n+1>
            block = ham[np.ix_(idx, idx)].real
            man = dressed_eigensystem(n, params)
            for vec, energy in ((man.ket_plus, man.e_plus), (man.ket_minus, man.e_minus)):
                np.testing.assert_allclose(block @ vec, energy * vec, atol=1e-14)

    def test_too_small_truncation_rejected(self):
        with pytest.raises(ValueError):
            hamiltonian_matrix(ModelParams(g=0.1), 1)
