"""Independent oracles for cross-checking the main code paths.

Deliberately written without reusing the package's algorithms: the
eigensolver is a textbook cyclic Jacobi method (not numpy.linalg.eigh),
and the circuit oracle multiplies explicit full-size gate matrices
(not stride kernels).
"""

from __future__ import annotations

import math

import numpy as np

from vqelab.circuit import AnsatzCircuit, Statevector
from vqelab.pauli import Hamiltonian

# ---------------------------------------------------------------------------
# Jacobi eigensolver for complex Hermitian matrices


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-14, max_sweeps: int = 60):
    """All eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations."""
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = math.sqrt(sum(abs(a[p, q]) ** 2 for p in range(n) for q in range(n) if p != q))
        scale = max(1.0, float(np.linalg.norm(np.diag(a))))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                magnitude = abs(apq)
                if magnitude <= tol:
                    continue
                phase = apq / magnitude
                tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rotation = np.eye(n, dtype=complex)
                rotation[p, p] = c
                rotation[p, q] = s * phase
                rotation[q, p] = -s * np.conj(phase)
                rotation[q, q] = c
                a = rotation.conj().T @ a @ rotation
    return np.sort(np.diag(a).real)


def jacobi_ground_energy(matrix: np.ndarray) -> float:
    return float(jacobi_eigenvalues(matrix)[0])


# ---------------------------------------------------------------------------
# Dense matrix-chain circuit simulator


def _embed_single(num_qubits: int, qubit: int, u2: np.ndarray) -> np.ndarray:
    left = np.eye(1 << qubit, dtype=complex)
    right = np.eye(1 << (num_qubits - 1 - qubit), dtype=complex)
    return np.kron(np.kron(left, u2), right)


def _cz_matrix(num_qubits: int, qubit_a: int, qubit_b: int) -> np.ndarray:
    dim = 1 << num_qubits
    matrix = np.eye(dim, dtype=complex)
    for index in range(dim):
        bit_a = (index >> (num_qubits - 1 - qubit_a)) & 1
        bit_b = (index >> (num_qubits - 1 - qubit_b)) & 1
        if bit_a and bit_b:
            matrix[index, index] = -1.0
    return matrix


def rx_matrix(angle: float) -> np.ndarray:
    c = math.cos(angle / 2.0)
    s = math.sin(angle / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def rz_matrix(angle: float) -> np.ndarray:
    return np.array(
        [[np.exp(-0.5j * angle), 0.0], [0.0, np.exp(0.5j * angle)]], dtype=complex
    )


def matrix_chain_state(circuit: AnsatzCircuit, params) -> np.ndarray:
    """Apply the circuit by multiplying explicit 2**N x 2**N gate matrices."""
    params = np.asarray(params, dtype=float)
    n = circuit.num_qubits
    state = np.zeros(1 << n, dtype=complex)
    state[0] = 1.0
    for gate in circuit.program:
        if gate.kind == "rx":
            full = _embed_single(n, gate.qubits[0], rx_matrix(params[gate.slot]))
        elif gate.kind == "rz":
            full = _embed_single(n, gate.qubits[0], rz_matrix(params[gate.slot]))
        else:
            full = _cz_matrix(n, gate.qubits[0], gate.qubits[1])
        state = full @ state
    return state


# ---------------------------------------------------------------------------
# Random inputs


def random_hamiltonian(
    rng: np.random.Generator,
    num_qubits: int,
    num_terms: int,
    coeff_scale: float = 1.0,
    labels: str = "IXYZ",
) -> Hamiltonian:
    terms = []
    for _ in range(num_terms):
        string = "".join(rng.choice(list(labels), size=num_qubits))
        terms.append((string, float(rng.uniform(-coeff_scale, coeff_scale))))
    return Hamiltonian(num_qubits, terms)


def random_state(rng: np.random.Generator, num_qubits: int) -> Statevector:
    dim = 1 << num_qubits
    amplitudes = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    amplitudes /= np.linalg.norm(amplitudes)
    return Statevector(num_qubits, amplitudes)
