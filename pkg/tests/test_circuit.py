"""Tests for statevector gate kernels and the layered ansatz builder."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vqelab import (
    Statevector,
    apply_cz,
    apply_rx,
    apply_rz,
    build_ansatz,
    run,
)

from oracles import matrix_chain_state, random_state

SQRT_HALF = math.sqrt(0.5)


def plus_state():
    return Statevector(1, [SQRT_HALF, SQRT_HALF])


class TestSingleQubitGates:
    def test_rx_zero_is_identity(self):
        state = apply_rx(Statevector(1), 0, 0.0)
        assert np.allclose(state.amplitudes, [1.0, 0.0])

    def test_rx_pi_flips_with_phase(self):
        state = apply_rx(Statevector(1), 0, math.pi)
        assert np.allclose(state.amplitudes, [0.0, -1j], atol=1e-15)

    def test_rx_half_pi_closed_form(self):
        state = apply_rx(Statevector(1), 0, math.pi / 2.0)
        assert np.allclose(state.amplitudes, [SQRT_HALF, -1j * SQRT_HALF])

    def test_rz_phase_on_basis_state(self):
        theta = 0.7317
        state = apply_rz(Statevector(1), 0, theta)
        assert np.allclose(state.amplitudes, [np.exp(-0.5j * theta), 0.0])

    def test_rz_pi_on_plus(self):
        state = apply_rz(plus_state(), 0, math.pi)
        expected = -1j * np.array([SQRT_HALF, -SQRT_HALF])
        assert np.allclose(state.amplitudes, expected)

    def test_rz_zero_is_identity(self):
        rng = np.random.default_rng(3)
        state = random_state(rng, 3)
        before = state.amplitudes.copy()
        apply_rz(state, 1, 0.0)
        assert np.allclose(state.amplitudes, before)

    def test_out_of_range_qubit_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            apply_rx(Statevector(2), 2, 0.1)
        with pytest.raises(ValueError, match="out of range"):
            apply_rz(Statevector(2), -1, 0.1)

    def test_gates_act_on_correct_qubit(self):
        # qubit 0 is the most significant bit
        state = apply_rx(Statevector(2), 0, math.pi)
        assert np.allclose(state.amplitudes, [0, 0, -1j, 0])
        state = apply_rx(Statevector(2), 1, math.pi)
        assert np.allclose(state.amplitudes, [0, -1j, 0, 0])


class TestCz:
    def test_cz_on_11(self):
        state = Statevector(2, [0, 0, 0, 1])
        apply_cz(state, 0, 1)
        assert np.allclose(state.amplitudes, [0, 0, 0, -1])

    def test_cz_trivial_on_10(self):
        state = Statevector(2, [0, 0, 1, 0])
        apply_cz(state, 0, 1)
        assert np.allclose(state.amplitudes, [0, 0, 1, 0])

    def test_cz_symmetric(self):
        rng = np.random.default_rng(17)
        a = random_state(rng, 4)
        b = a.copy()
        apply_cz(a, 1, 3)
        apply_cz(b, 3, 1)
        assert np.allclose(a.amplitudes, b.amplitudes)

    def test_equal_qubits_rejected(self):
        with pytest.raises(ValueError, match="differ"):
            apply_cz(Statevector(2), 1, 1)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            apply_cz(Statevector(2), 0, 5)


class TestBuildAnsatz:
    def test_fig1_shape(self):
        circuit = build_ansatz(3, 2)
        assert circuit.num_parameters == 18

    def test_heh_shape(self):
        assert build_ansatz(2, 1).num_parameters == 8

    def test_single_qubit_no_layers(self):
        circuit = build_ansatz(1, 0)
        assert circuit.num_parameters == 2
        assert all(g.kind != "cz" for g in circuit.program)

    @pytest.mark.parametrize("n", range(1, 11))
    @pytest.mark.parametrize("m", range(0, 9))
    def test_slot_count_law(self, n, m):
        assert build_ansatz(n, m).num_parameters == 2 * n * (m + 1)

    def test_chain_entangler_pairs(self):
        circuit = build_ansatz(4, 1, "chain")
        pairs = [g.qubits for g in circuit.program if g.kind == "cz"]
        assert pairs == [(0, 1), (1, 2), (2, 3)]

    def test_ring_adds_closing_edge(self):
        circuit = build_ansatz(4, 1, "ring")
        pairs = [g.qubits for g in circuit.program if g.kind == "cz"]
        assert pairs == [(0, 1), (1, 2), (2, 3), (3, 0)]

    def test_ring_on_two_qubits_degenerates_to_chain(self):
        # a second CZ on (0, 1) would cancel the first outright
        ring = [g.qubits for g in build_ansatz(2, 1, "ring").program if g.kind == "cz"]
        assert ring == [(0, 1)]

    def test_slot_order_layer_major(self):
        circuit = build_ansatz(2, 1)
        slots = [(g.kind, g.qubits[0], g.slot) for g in circuit.program if g.kind != "cz"]
        assert slots == [
            ("rx", 0, 0), ("rz", 0, 1), ("rx", 1, 2), ("rz", 1, 3),
            ("rx", 0, 4), ("rz", 0, 5), ("rx", 1, 6), ("rz", 1, 7),
        ]

    def test_bad_arguments_rejected(self):
        with pytest.raises(ValueError):
            build_ansatz(0, 1)
        with pytest.raises(ValueError):
            build_ansatz(2, -1)
        with pytest.raises(ValueError, match="topology"):
            build_ansatz(2, 1, "all-to-all")


class TestRun:
    def test_zero_parameters_give_zero_state(self):
        for n, m in [(1, 0), (2, 1), (3, 2), (4, 3)]:
            circuit = build_ansatz(n, m)
            state = run(circuit, np.zeros(circuit.num_parameters))
            expected = np.zeros(1 << n)
            expected[0] = 1.0
            assert np.array_equal(state.amplitudes, expected.astype(complex))

    def test_single_qubit_composition(self):
        state = run(build_ansatz(1, 0), [math.pi, 0.0])
        assert np.allclose(state.amplitudes, [0.0, -1j], atol=1e-15)

    def test_matches_matrix_chain_seeded(self):
        rng = np.random.default_rng(8)
        circuit = build_ansatz(2, 1)
        theta = rng.uniform(0, 2 * math.pi, circuit.num_parameters)
        assert np.allclose(
            run(circuit, theta).amplitudes, matrix_chain_state(circuit, theta), atol=1e-10
        )

    def test_oracle_equivalence_many_random(self):
        rng = np.random.default_rng(21)
        for _ in range(40):
            n = int(rng.integers(1, 4))
            m = int(rng.integers(0, 4))
            topology = "ring" if rng.random() < 0.5 else "chain"
            circuit = build_ansatz(n, m, topology)
            theta = rng.uniform(-2 * math.pi, 2 * math.pi, circuit.num_parameters)
            assert np.allclose(
                run(circuit, theta).amplitudes,
                matrix_chain_state(circuit, theta),
                atol=1e-10,
            )

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="parameters"):
            run(build_ansatz(2, 1), np.zeros(7))

    def test_non_finite_parameters_rejected(self):
        params = np.zeros(8)
        params[3] = math.nan
        with pytest.raises(ValueError, match="non-finite"):
            run(build_ansatz(2, 1), params)

    def test_norm_conservation_many(self):
        rng = np.random.default_rng(31)
        for _ in range(1000):
            n = int(rng.integers(1, 5))
            m = int(rng.integers(0, 3))
            circuit = build_ansatz(n, m)
            theta = rng.uniform(-10, 10, circuit.num_parameters)
            assert abs(run(circuit, theta).norm() - 1.0) <= 1e-10

    def test_unitarity_preserves_inner_products(self):
        rng = np.random.default_rng(77)
        for apply_gate in (
            lambda s: apply_rx(s, 1, 0.913),
            lambda s: apply_rz(s, 2, -2.4),
            lambda s: apply_cz(s, 0, 2),
        ):
            u = random_state(rng, 3)
            v = random_state(rng, 3)
            before = u.inner(v)
            apply_gate(u)
            apply_gate(v)
            assert abs(u.inner(v) - before) <= 1e-10

    def test_rotation_periodicity(self):
        rng = np.random.default_rng(13)
        circuit = build_ansatz(2, 2)
        theta = rng.uniform(0, 2 * math.pi, circuit.num_parameters)
        shifted = theta + 4.0 * math.pi
        assert np.allclose(
            run(circuit, theta).amplitudes, run(circuit, shifted).amplitudes, atol=1e-10
        )


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=5),
    m=st.integers(min_value=0, max_value=4),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_run_preserves_norm(n, m, seed):
    circuit = build_ansatz(n, m)
    theta = np.random.default_rng(seed).uniform(0, 2 * math.pi, circuit.num_parameters)
    assert abs(run(circuit, theta).norm() - 1.0) <= 1e-10
