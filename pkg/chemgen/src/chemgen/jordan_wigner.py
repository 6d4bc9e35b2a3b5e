"""Jordan-Wigner mapping of second-quantized operators to Pauli strings.

Ladder operators carry a Z chain over all lower-index qubits:
a+_p = (X_p - iY_p)/2 * Z_0..Z_{p-1},  a_p = (X_p + iY_p)/2 * Z_0..Z_{p-1}.
Qubit p corresponds to spin orbital p; string position p is qubit p.
"""

from __future__ import annotations

import numpy as np

from .active_space import ActiveSpaceIntegrals

# single-qubit Pauli products: (left, right) -> (phase, result)
_PRODUCT = {
    ("I", "I"): (1.0, "I"), ("I", "X"): (1.0, "X"), ("I", "Y"): (1.0, "Y"), ("I", "Z"): (1.0, "Z"),
    ("X", "I"): (1.0, "X"), ("Y", "I"): (1.0, "Y"), ("Z", "I"): (1.0, "Z"),
    ("X", "X"): (1.0, "I"), ("Y", "Y"): (1.0, "I"), ("Z", "Z"): (1.0, "I"),
    ("X", "Y"): (1j, "Z"), ("Y", "X"): (-1j, "Z"),
    ("Y", "Z"): (1j, "X"), ("Z", "Y"): (-1j, "X"),
    ("Z", "X"): (1j, "Y"), ("X", "Z"): (-1j, "Y"),
}


class QubitOperator:
    """Sparse sum of Pauli strings with complex coefficients."""

    __slots__ = ("num_qubits", "terms")

    def __init__(self, num_qubits: int, terms: dict[str, complex] | None = None):
        self.num_qubits = num_qubits
        self.terms: dict[str, complex] = dict(terms or {})

    def add(self, string: str, coefficient: complex) -> None:
        value = self.terms.get(string, 0.0) + coefficient
        if value == 0.0:
            self.terms.pop(string, None)
        else:
            self.terms[string] = value

    def add_operator(self, other: "QubitOperator", scale: complex = 1.0) -> None:
        for string, coefficient in other.terms.items():
            self.add(string, scale * coefficient)

    def multiply(self, other: "QubitOperator") -> "QubitOperator":
        product = QubitOperator(self.num_qubits)
        for left, lc in self.terms.items():
            for right, rc in other.terms.items():
                phase = lc * rc
                chars = []
                for a, b in zip(left, right):
                    factor, result = _PRODUCT[(a, b)]
                    phase *= factor
                    chars.append(result)
                product.add("".join(chars), phase)
        return product

    def compress(self, cutoff: float = 1e-12) -> None:
        self.terms = {s: c for s, c in self.terms.items() if abs(c) > cutoff}


def ladder_operator(num_qubits: int, index: int, creation: bool) -> QubitOperator:
    prefix = "Z" * index
    suffix = "I" * (num_qubits - index - 1)
    sign = -0.5j if creation else 0.5j
    return QubitOperator(num_qubits, {
        prefix + "X" + suffix: 0.5,
        prefix + "Y" + suffix: sign,
    })


def jordan_wigner(integrals: ActiveSpaceIntegrals, imag_tol: float = 1e-10) -> QubitOperator:
    """Map core + one-body + two-body integrals to a qubit operator.

    All surviving coefficients must be real (the orbitals are real); an
    imaginary residue above ``imag_tol`` raises, smaller ones are truncated.
    """
    n = integrals.num_spin_orbitals
    operator = QubitOperator(n, {"I" * n: complex(integrals.core_energy)})

    raising = [ladder_operator(n, p, creation=True) for p in range(n)]
    lowering = [ladder_operator(n, p, creation=False) for p in range(n)]

    one = integrals.one_body
    for p in range(n):
        for q in range(n):
            if one[p, q] == 0.0:
                continue
            operator.add_operator(raising[p].multiply(lowering[q]), one[p, q])

    two = integrals.two_body
    for p in range(n):
        for q in range(n):
            if p == q:
                continue  # a+_p a+_q vanishes for p == q
            left = raising[p].multiply(raising[q])
            for s in range(n):
                if not np.any(two[p, q, :, s]):
                    continue
                left_s = left.multiply(lowering[s])
                for r in range(n):
                    if s == r:
                        continue
                    value = two[p, q, r, s]
                    if value == 0.0:
                        continue
                    operator.add_operator(left_s.multiply(lowering[r]), 0.5 * value)

    cleaned = QubitOperator(n)
    for string, coefficient in operator.terms.items():
        if abs(coefficient.imag) > imag_tol:
            raise ValueError(
                f"term {string} has imaginary coefficient {coefficient.imag:.3e}; "
                "input integrals are not Hermitian"
            )
        cleaned.add(string, coefficient.real)
    cleaned.compress()
    return cleaned


def hartree_fock_expectation(operator: QubitOperator, num_occupied: int) -> float:
    """<HF|H|HF> on the computational basis state occupying the first orbitals.

    Only I/Z strings contribute on a basis state; each Z on an occupied
    qubit contributes -1, on an empty one +1.
    """
    total = 0.0
    for string, coefficient in operator.terms.items():
        if any(ch in ("X", "Y") for ch in string):
            continue
        value = 1.0
        for position, ch in enumerate(string):
            if ch == "Z" and position < num_occupied:
                value = -value
        total += coefficient.real * value
    return total
