"""Energy evaluation E = <psi|H|psi>: exact, and shot-sampled per Pauli term.

Exact mode applies each Pauli string to a scratch copy of the state through
index/bit arithmetic and accumulates coefficient-weighted overlaps.  Sampled
mode rotates each qubit of a term into its measurement basis, draws basis
states from |amplitude|^2 by inverse CDF, and averages +/-1 eigenvalue
products, one pass of ``shots`` samples per non-identity term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .circuit import AnsatzCircuit, Statevector, run
from .pauli import Hamiltonian

#: Imaginary part of an exact expectation above this signals a
#: non-Hermitian input bug rather than roundoff.
IMAG_TOLERANCE = 1e-8

#: Full phase/permutation tables are precomputed per Hamiltonian while
#: terms * 2**N stays below this; beyond it, masks are expanded on the fly.
_TABLE_BUDGET = 1 << 21

_SQRT_HALF = math.sqrt(0.5)

# Maps the +1/-1 eigenvectors of X onto |0>/|1>.
_ROT_X = np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=complex)
# Maps the +1/-1 eigenvectors of Y onto |0>/|1> (H o S-dagger).
_ROT_Y = np.array([[_SQRT_HALF, -1j * _SQRT_HALF], [_SQRT_HALF, 1j * _SQRT_HALF]], dtype=complex)


@dataclass(frozen=True)
class EstimatorConfig:
    """Energy-evaluation mode: exact expectation or finite sampling."""

    mode: str = "exact"
    shots: int = 8192
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("exact", "sampled"):
            raise ValueError(f"mode must be 'exact' or 'sampled', got {self.mode!r}")
        if self.mode == "sampled" and self.shots < 1:
            raise ValueError("shots must be >= 1 in sampled mode")


@dataclass(frozen=True)
class EnergyEstimate:
    """An energy value plus the number of circuit executions it consumed."""

    value: float
    evaluations_used: int


def _masks(string: str) -> tuple[int, int, int]:
    """(x_mask, zy_mask, y_count) for a Pauli string, qubit 0 = MSB."""
    n = len(string)
    x_mask = 0
    zy_mask = 0
    y_count = 0
    for q, ch in enumerate(string):
        bit = 1 << (n - 1 - q)
        if ch in ("X", "Y"):
            x_mask |= bit
        if ch in ("Z", "Y"):
            zy_mask |= bit
        if ch == "Y":
            y_count += 1
    return x_mask, zy_mask, y_count


@lru_cache(maxsize=128)
def _compiled_terms(hamiltonian: Hamiltonian):
    """Per-term permutation/sign data, with full tables for small systems."""
    dim = 1 << hamiltonian.num_qubits
    tables = len(hamiltonian.terms) * dim <= _TABLE_BUDGET
    indices = np.arange(dim, dtype=np.uint64)
    compiled = []
    for term in hamiltonian.terms:
        x_mask, zy_mask, y_count = _masks(term.string)
        prefactor = 1j**y_count
        if tables:
            perm = indices ^ np.uint64(x_mask)
            signs = 1.0 - 2.0 * (np.bitwise_count(perm & np.uint64(zy_mask)) & 1)
            compiled.append((term.coefficient * prefactor, perm, signs, None))
        else:
            compiled.append((term.coefficient * prefactor, None, None, (x_mask, zy_mask)))
    return tuple(compiled)


def expectation_exact(state: Statevector, hamiltonian: Hamiltonian) -> float:
    """Exact energy sum_k c_k <psi|P_k|psi>.

    Raises:
        ValueError: on a qubit-count mismatch, or if the accumulated
            imaginary part exceeds ``IMAG_TOLERANCE``.
    """
    if state.num_qubits != hamiltonian.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits, Hamiltonian {hamiltonian.num_qubits}"
        )
    amps = state.amplitudes
    total = 0.0 + 0.0j
    for weight, perm, signs, masks in _compiled_terms(hamiltonian):
        if perm is not None:
            total += weight * np.vdot(amps, signs * amps[perm])
        else:
            x_mask, zy_mask = masks
            indices = np.arange(amps.shape[0], dtype=np.uint64) ^ np.uint64(x_mask)
            signs = 1.0 - 2.0 * (np.bitwise_count(indices & np.uint64(zy_mask)) & 1)
            total += weight * np.vdot(amps, signs * amps[indices])
    if abs(total.imag) > IMAG_TOLERANCE:
        raise ValueError(
            f"expectation has imaginary part {total.imag:.3e}; input is not Hermitian"
        )
    return float(total.real)


def _apply_2x2(amps: np.ndarray, num_qubits: int, qubit: int, matrix: np.ndarray) -> None:
    view = amps.reshape(1 << qubit, 2, 1 << (num_qubits - 1 - qubit))
    a = view[:, 0, :]
    b = view[:, 1, :]
    new_a = matrix[0, 0] * a + matrix[0, 1] * b
    new_b = matrix[1, 0] * a + matrix[1, 1] * b
    view[:, 0, :] = new_a
    view[:, 1, :] = new_b


def expectation_sampled(
    state: Statevector,
    hamiltonian: Hamiltonian,
    shots: int = 8192,
    rng: np.random.Generator | None = None,
) -> EnergyEstimate:
    """Shot-based energy estimate, ``shots`` samples per non-identity term.

    Identity terms contribute their coefficient exactly; every other term
    is measured independently in its own rotated basis, so
    ``evaluations_used = shots * (number of non-identity terms)``.
    """
    if state.num_qubits != hamiltonian.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits, Hamiltonian {hamiltonian.num_qubits}"
        )
    if shots < 1:
        raise ValueError("shots must be >= 1")
    if rng is None:
        rng = np.random.default_rng()

    n = hamiltonian.num_qubits
    dim = 1 << n
    total = 0.0
    evaluations = 0
    for term in hamiltonian.terms:
        if term.string == "I" * n:
            total += term.coefficient
            continue
        scratch = state.amplitudes.copy()
        support_mask = 0
        for q, ch in enumerate(term.string):
            if ch == "I":
                continue
            support_mask |= 1 << (n - 1 - q)
            if ch == "X":
                _apply_2x2(scratch, n, q, _ROT_X)
            elif ch == "Y":
                _apply_2x2(scratch, n, q, _ROT_Y)
        cumulative = np.cumsum(np.abs(scratch) ** 2)
        draws = rng.random(shots) * cumulative[-1]
        samples = np.searchsorted(cumulative, draws, side="right")
        np.clip(samples, 0, dim - 1, out=samples)
        parity = np.bitwise_count(samples.astype(np.uint64) & np.uint64(support_mask)) & 1
        total += term.coefficient * float(np.mean(1.0 - 2.0 * parity))
        evaluations += shots
    return EnergyEstimate(total, evaluations)


class EnergyFunction:
    """Callable E(theta) over a fixed (Hamiltonian, circuit, estimator) triple.

    Tracks the cumulative number of circuit executions consumed:
    one per call in exact mode, shots * non-identity-terms per call in
    sampled mode.  Optimizers read ``evaluations_used`` for cost accounting.
    """

    def __init__(
        self,
        hamiltonian: Hamiltonian,
        circuit: AnsatzCircuit,
        config: EstimatorConfig | None = None,
        rng: np.random.Generator | None = None,
    ):
        if circuit.num_qubits != hamiltonian.num_qubits:
            raise ValueError(
                f"circuit has {circuit.num_qubits} qubits, Hamiltonian {hamiltonian.num_qubits}"
            )
        self.hamiltonian = hamiltonian
        self.circuit = circuit
        self.config = config or EstimatorConfig()
        if rng is None:
            rng = np.random.default_rng(self.config.seed)
        self._rng = rng
        self.evaluations_used = 0

    def __call__(self, params) -> float:
        state = run(self.circuit, params)
        if self.config.mode == "exact":
            self.evaluations_used += 1
            return expectation_exact(state, self.hamiltonian)
        estimate = expectation_sampled(
            state, self.hamiltonian, self.config.shots, self._rng
        )
        self.evaluations_used += estimate.evaluations_used
        return estimate.value
