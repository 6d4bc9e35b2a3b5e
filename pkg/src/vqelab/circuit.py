"""Dense statevector simulation of the layered Rx/Rz/CZ ansatz.

Gates act in place on the amplitude vector through stride arithmetic
(reshaped views); no 2**N x 2**N matrices are ever built here.  Qubit 0 is
the most significant bit of a basis-state index, matching the Pauli-string
convention of :mod:`vqelab.pauli`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TOPOLOGIES = ("chain", "ring")


class Statevector:
    """Normalized complex amplitude vector over the 2**N basis states."""

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int, amplitudes: np.ndarray | None = None):
        if num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        dim = 1 << num_qubits
        if amplitudes is None:
            amplitudes = np.zeros(dim, dtype=complex)
            amplitudes[0] = 1.0
        else:
            amplitudes = np.asarray(amplitudes, dtype=complex).reshape(-1)
            if amplitudes.shape != (dim,):
                raise ValueError(
                    f"expected {dim} amplitudes for {num_qubits} qubits, got {amplitudes.shape}"
                )
            amplitudes = amplitudes.copy()
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "amplitudes", amplitudes)

    def __setattr__(self, name, value):
        raise AttributeError("Statevector attributes are fixed; amplitudes mutate in place")

    def __reduce__(self):
        return (Statevector, (self.num_qubits, self.amplitudes))

    def copy(self) -> "Statevector":
        return Statevector(self.num_qubits, self.amplitudes)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "Statevector") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _check_qubit(state: Statevector, qubit: int) -> None:
    if not 0 <= qubit < state.num_qubits:
        raise ValueError(f"qubit {qubit} out of range for {state.num_qubits} qubits")


def _qubit_view(state: Statevector, qubit: int) -> np.ndarray:
    """View of the amplitudes as (higher qubits, this qubit, lower qubits)."""
    n = state.num_qubits
    return state.amplitudes.reshape(1 << qubit, 2, 1 << (n - 1 - qubit))


def apply_rx(state: Statevector, qubit: int, angle: float) -> Statevector:
    """Apply Rx(angle) = exp(-i*angle/2 * X) to one qubit, in place."""
    _check_qubit(state, qubit)
    c = math.cos(angle / 2.0)
    s = math.sin(angle / 2.0)
    view = _qubit_view(state, qubit)
    a = view[:, 0, :]
    b = view[:, 1, :]
    new_a = c * a - 1j * s * b
    new_b = -1j * s * a + c * b
    view[:, 0, :] = new_a
    view[:, 1, :] = new_b
    return state


def apply_rz(state: Statevector, qubit: int, angle: float) -> Statevector:
    """Apply Rz(angle) = exp(-i*angle/2 * Z) to one qubit, in place."""
    _check_qubit(state, qubit)
    phase = complex(math.cos(angle / 2.0), -math.sin(angle / 2.0))
    view = _qubit_view(state, qubit)
    view[:, 0, :] *= phase
    view[:, 1, :] *= phase.conjugate()
    return state


def apply_cz(state: Statevector, control: int, target: int) -> Statevector:
    """Negate every amplitude whose control and target bits are both 1.

    CZ is symmetric in its two qubits; the (control, target) naming follows
    the usual gate form but carries no asymmetry.
    """
    _check_qubit(state, control)
    _check_qubit(state, target)
    if control == target:
        raise ValueError("control and target must differ")
    hi, lo = sorted((control, target))
    n = state.num_qubits
    view = state.amplitudes.reshape(
        1 << hi, 2, 1 << (lo - hi - 1), 2, 1 << (n - 1 - lo)
    )
    view[:, 1, :, 1, :] *= -1.0
    return state


@dataclass(frozen=True)
class Gate:
    """One program step: kind is 'rx', 'rz' (with a parameter slot) or 'cz'."""

    kind: str
    qubits: tuple[int, ...]
    slot: int | None = None


@dataclass(frozen=True)
class AnsatzCircuit:
    """Layered hardware-efficient ansatz: rotation layers separated by CZ layers.

    The program starts with one Rx/Rz rotation layer and appends
    ``num_layers`` repetitions of (entangling CZ layer, rotation layer),
    giving ``2 * num_qubits * (num_layers + 1)`` parameter slots.
    """

    num_qubits: int
    num_layers: int
    entangler_topology: str = "chain"
    program: tuple[Gate, ...] = field(default=(), repr=False)

    @property
    def num_parameters(self) -> int:
        return 2 * self.num_qubits * (self.num_layers + 1)


def _entangler_pairs(n: int, topology: str) -> list[tuple[int, int]]:
    pairs = [(q, q + 1) for q in range(n - 1)]
    # the closing ring edge only exists for n > 2; on two qubits it would
    # duplicate (0, 1) and cancel it, CZ being self-inverse
    if topology == "ring" and n > 2:
        pairs.append((n - 1, 0))
    return pairs


def build_ansatz(num_qubits: int, num_layers: int, topology: str = "chain") -> AnsatzCircuit:
    """Build the layered ansatz for ``num_qubits`` qubits and ``num_layers`` layers.

    Parameter slots are ordered layer-major, then by qubit, then (Rx, Rz):
    slot = 2*N*layer + 2*qubit + (0 for Rx, 1 for Rz).
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    if num_layers < 0:
        raise ValueError("num_layers must be >= 0")
    if topology not in TOPOLOGIES:
        raise ValueError(f"unknown topology {topology!r}; expected one of {TOPOLOGIES}")

    program: list[Gate] = []

    def rotation_layer(layer: int) -> None:
        base = 2 * num_qubits * layer
        for q in range(num_qubits):
            program.append(Gate("rx", (q,), base + 2 * q))
            program.append(Gate("rz", (q,), base + 2 * q + 1))

    rotation_layer(0)
    for layer in range(1, num_layers + 1):
        for pair in _entangler_pairs(num_qubits, topology):
            program.append(Gate("cz", pair))
        rotation_layer(layer)

    return AnsatzCircuit(num_qubits, num_layers, topology, tuple(program))


def run(circuit: AnsatzCircuit, params) -> Statevector:
    """Apply the circuit program to |0...0> and return the resulting state."""
    params = np.asarray(params, dtype=float).reshape(-1)
    if params.shape != (circuit.num_parameters,):
        raise ValueError(
            f"expected {circuit.num_parameters} parameters, got {params.shape[0]}"
        )
    if not np.all(np.isfinite(params)):
        raise ValueError("parameter vector contains non-finite entries")

    state = Statevector(circuit.num_qubits)
    for gate in circuit.program:
        if gate.kind == "rx":
            apply_rx(state, gate.qubits[0], params[gate.slot])
        elif gate.kind == "rz":
            apply_rz(state, gate.qubits[0], params[gate.slot])
        else:
            apply_cz(state, gate.qubits[0], gate.qubits[1])
    return state
