"""Shared helpers for chemgen tests: dense matrices and CSV parsing.

Kept local so the tests exercise chemgen and the shared file formats without
importing the consumer package.
"""

from __future__ import annotations

import csv

import numpy as np

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def densify(operator) -> np.ndarray:
    """Dense matrix of a QubitOperator (leftmost string char = qubit 0 = MSB)."""
    dim = 1 << operator.num_qubits
    matrix = np.zeros((dim, dim), dtype=complex)
    for string, coefficient in operator.terms.items():
        term = np.array([[1.0]], dtype=complex)
        for ch in string:
            term = np.kron(term, PAULI[ch])
        matrix += coefficient * term
    return matrix


def ground_energy(operator) -> float:
    return float(np.linalg.eigvalsh(densify(operator))[0])


def read_sweep_csv(path):
    """Rows of the sweep CSV written by the consumer toolkit."""
    rows = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        for row in reader:
            rows.append(row)
    return rows
