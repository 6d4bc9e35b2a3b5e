"""Minimal STO-3G basis set: hydrogen and oxygen.

Exponents and contraction coefficients are the standard published STO-3G
parameters (coefficients are for normalized primitives; contraction
renormalization happens in the integral layer).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

BOHR_PER_ANGSTROM = 1.0 / 0.529177210903

ATOMIC_NUMBER = {"H": 1, "O": 8}

# element -> list of shells, each (angular momentum letter, exponents, coefficients)
STO3G = {
    "H": [
        ("s", [3.425250914, 0.6239137298, 0.1688554040],
              [0.1543289673, 0.5353281423, 0.4446345422]),
    ],
    "O": [
        ("s", [130.7093200, 23.80886100, 6.443608313],
              [0.1543289673, 0.5353281423, 0.4446345422]),
        ("s", [5.033151319, 1.169596125, 0.3803889600],
              [-0.09996722919, 0.3995128261, 0.7001154689]),
        ("p", [5.033151319, 1.169596125, 0.3803889600],
              [0.1559162750, 0.6076837186, 0.3919573931]),
    ],
}

# Cartesian components per angular momentum letter.
ANGULAR = {
    "s": [(0, 0, 0)],
    "p": [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
}


@dataclass(frozen=True)
class BasisFunction:
    """One contracted Cartesian Gaussian centered on an atom."""

    center: tuple[float, float, float]  # Bohr
    lmn: tuple[int, int, int]
    exponents: tuple[float, ...]
    coefficients: tuple[float, ...]  # including primitive norms and contraction norm


def _primitive_norm(alpha: float, lmn: tuple[int, int, int]) -> float:
    l, m, n = lmn
    total = l + m + n
    df = _double_factorial(2 * l - 1) * _double_factorial(2 * m - 1) * _double_factorial(2 * n - 1)
    return (2.0 * alpha / np.pi) ** 0.75 * (4.0 * alpha) ** (total / 2.0) / np.sqrt(df)


def _double_factorial(k: int) -> float:
    if k <= 0:
        return 1.0
    result = 1.0
    while k > 0:
        result *= k
        k -= 2
    return result


def build_basis(atoms: list[tuple[str, tuple[float, float, float]]]) -> list[BasisFunction]:
    """Contracted STO-3G basis for a list of (element, position-in-Bohr) atoms.

    Contractions are renormalized so every basis function has unit self-overlap.
    """
    from .integrals import overlap  # deferred: integrals imports this module's types

    functions = []
    for element, position in atoms:
        if element not in STO3G:
            raise ValueError(f"no STO-3G data for element {element!r}")
        for letter, exponents, coefficients in STO3G[element]:
            for lmn in ANGULAR[letter]:
                scaled = [
                    c * _primitive_norm(a, lmn) for a, c in zip(exponents, coefficients)
                ]
                function = BasisFunction(
                    tuple(position), lmn, tuple(exponents), tuple(scaled)
                )
                self_overlap = overlap(function, function)
                normalized = tuple(c / np.sqrt(self_overlap) for c in scaled)
                functions.append(
                    BasisFunction(tuple(position), lmn, tuple(exponents), normalized)
                )
    return functions


def nuclear_repulsion(atoms: list[tuple[str, tuple[float, float, float]]]) -> float:
    energy = 0.0
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            zi = ATOMIC_NUMBER[atoms[i][0]]
            zj = ATOMIC_NUMBER[atoms[j][0]]
            distance = float(np.linalg.norm(np.subtract(atoms[i][1], atoms[j][1])))
            energy += zi * zj / distance
    return energy
