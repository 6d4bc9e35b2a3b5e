"""Pauli-string Hamiltonians: algebra, serialization, exact diagonalization.

A Hamiltonian is a real-weighted sum of Pauli strings over a fixed qubit
count.  The convention used throughout the package: the leftmost character
of a Pauli string acts on qubit 0, and qubit 0 indexes the most significant
bit of a basis-state integer.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .circuit import Statevector

PAULI_LABELS = "IXYZ"

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

#: Dense-matrix construction refuses larger systems (2**14 x 2**14 is the
#: largest case the package is meant to diagonalize).
DEFAULT_QUBIT_CAP = 14


class SchemaError(ValueError):
    """A file does not conform to one of the documented data formats."""


def parse_pauli_string(text: str | Sequence[str], num_qubits: int) -> str:
    """Canonicalize a Pauli string over {I, X, Y, Z}.

    The character '1' is accepted as an alias for 'I' (common in condensed
    notation such as "X1" for X on the first qubit, identity on the second).

    Raises:
        ValueError: on an invalid character or a length mismatch.
    """
    text = "".join(text)
    if not text:
        raise ValueError("Pauli string must be non-empty")
    canonical = text.replace("1", "I")
    for ch in canonical:
        if ch not in PAULI_LABELS:
            raise ValueError(f"invalid Pauli character {ch!r} in {text!r}")
    if len(canonical) != num_qubits:
        raise ValueError(
            f"Pauli string {text!r} has length {len(canonical)}, expected {num_qubits}"
        )
    return canonical


@dataclass(frozen=True)
class PauliTerm:
    """One weighted Pauli string.  Coefficients are real (Hartree)."""

    coefficient: float
    string: str

    def __post_init__(self):
        if not math.isfinite(self.coefficient):
            raise ValueError(f"non-finite coefficient {self.coefficient!r}")


class Hamiltonian:
    """Real-weighted sum of Pauli strings on a fixed number of qubits.

    Terms are normalized on construction: strings are canonicalized,
    duplicates merged by summing coefficients, exact-zero terms dropped,
    and the result sorted by string.  Instances are immutable and hashable.
    """

    __slots__ = ("num_qubits", "terms")

    def __init__(self, num_qubits: int, terms: Iterable[PauliTerm | tuple]):
        if num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        merged: dict[str, float] = {}
        for term in terms:
            if isinstance(term, PauliTerm):
                coeff, string = term.coefficient, term.string
            else:
                string, coeff = term
            string = parse_pauli_string(string, num_qubits)
            coeff = float(coeff)
            if not math.isfinite(coeff):
                raise ValueError(f"non-finite coefficient {coeff!r} for {string!r}")
            merged[string] = merged.get(string, 0.0) + coeff
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(
            self,
            "terms",
            tuple(
                PauliTerm(c, s) for s, c in sorted(merged.items()) if c != 0.0
            ),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Hamiltonian is immutable")

    def __reduce__(self):
        return (Hamiltonian, (self.num_qubits, self.terms))

    def __eq__(self, other):
        if not isinstance(other, Hamiltonian):
            return NotImplemented
        return self.num_qubits == other.num_qubits and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_qubits, self.terms))

    def __repr__(self):
        return f"Hamiltonian(num_qubits={self.num_qubits}, terms={len(self.terms)})"


@dataclass(frozen=True)
class Spectrum:
    """Ground-state eigenpair of a Hamiltonian."""

    ground_energy: float
    ground_state: Statevector


def to_matrix(hamiltonian: Hamiltonian, max_qubits: int = DEFAULT_QUBIT_CAP) -> np.ndarray:
    """Dense 2**N x 2**N Hermitian matrix of the Hamiltonian.

    Raises:
        ValueError: if N exceeds ``max_qubits`` (resource guard; the dense
            matrix grows as 4**N).
    """
    n = hamiltonian.num_qubits
    if n > max_qubits:
        raise ValueError(f"{n} qubits exceeds the dense-matrix cap of {max_qubits}")
    dim = 1 << n
    matrix = np.zeros((dim, dim), dtype=complex)
    for term in hamiltonian.terms:
        factors = [PAULI_MATRICES[ch] for ch in term.string]
        matrix += term.coefficient * reduce(np.kron, factors)
    return matrix


def ground_energy_exact(
    hamiltonian: Hamiltonian, max_qubits: int = DEFAULT_QUBIT_CAP
) -> Spectrum:
    """Exact ground energy and a ground eigenvector via dense diagonalization.

    For a degenerate ground space any eigenvector attaining the minimum
    eigenvalue may be returned.  Eigensolver non-convergence propagates as
    ``numpy.linalg.LinAlgError``.
    """
    matrix = to_matrix(hamiltonian, max_qubits=max_qubits)
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    state = Statevector(hamiltonian.num_qubits, eigenvectors[:, 0])
    return Spectrum(float(eigenvalues[0]), state)


def save_hamiltonian(hamiltonian: Hamiltonian, path, metadata: dict | None = None) -> None:
    """Write a Hamiltonian as JSON: ``{"num_qubits": N, "terms": [...]}``.

    Coefficients are written with full round-trip precision.  An optional
    ``metadata`` object is carried verbatim (used by external generators).
    """
    payload: dict = {
        "num_qubits": hamiltonian.num_qubits,
        "terms": [
            {"pauli": t.string, "coeff": t.coefficient} for t in hamiltonian.terms
        ],
    }
    if metadata is not None:
        payload["metadata"] = metadata
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=1)
        handle.write("\n")


def load_hamiltonian(path) -> Hamiltonian:
    """Load a Hamiltonian from the JSON format written by ``save_hamiltonian``.

    Raises:
        SchemaError: on malformed JSON, missing keys, bad string lengths,
            invalid characters, or non-finite coefficients.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc

    if not isinstance(payload, dict):
        raise SchemaError(f"{path}: top level must be a JSON object")
    for key in ("num_qubits", "terms"):
        if key not in payload:
            raise SchemaError(f"{path}: missing required key {key!r}")
    num_qubits = payload["num_qubits"]
    if not isinstance(num_qubits, int) or num_qubits < 1:
        raise SchemaError(f"{path}: num_qubits must be a positive integer")
    raw_terms = payload["terms"]
    if not isinstance(raw_terms, list):
        raise SchemaError(f"{path}: terms must be a list")

    terms = []
    for entry in raw_terms:
        if not isinstance(entry, dict) or "pauli" not in entry or "coeff" not in entry:
            raise SchemaError(f"{path}: each term needs 'pauli' and 'coeff'")
        coeff = entry["coeff"]
        if not isinstance(coeff, (int, float)) or isinstance(coeff, bool):
            raise SchemaError(f"{path}: coefficient {coeff!r} is not a number")
        terms.append((entry["pauli"], coeff))
    try:
        return Hamiltonian(num_qubits, terms)
    except ValueError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
