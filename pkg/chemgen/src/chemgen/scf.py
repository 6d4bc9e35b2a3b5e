"""Restricted Hartree-Fock with DIIS convergence acceleration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ScfError(RuntimeError):
    """The self-consistent field did not converge; reported verbatim upstream."""


@dataclass
class ScfResult:
    energy_electronic: float
    energy_nuclear: float
    orbital_energies: np.ndarray
    coefficients: np.ndarray  # AO x MO
    iterations: int

    @property
    def energy_total(self) -> float:
        return self.energy_electronic + self.energy_nuclear


def _fock_matrix(hcore: np.ndarray, density: np.ndarray, eri: np.ndarray) -> np.ndarray:
    coulomb = np.einsum("ls,mnls->mn", density, eri)
    exchange = np.einsum("ls,mlns->mn", density, eri)
    return hcore + coulomb - 0.5 * exchange


def restricted_hartree_fock(
    s_matrix: np.ndarray,
    t_matrix: np.ndarray,
    v_matrix: np.ndarray,
    eri: np.ndarray,
    num_electrons: int,
    energy_nuclear: float,
    max_iterations: int = 200,
    energy_tol: float = 1e-11,
    residual_tol: float = 1e-8,
    diis_depth: int = 8,
) -> ScfResult:
    """Closed-shell SCF; density carries the factor 2 for double occupation."""
    if num_electrons % 2 != 0:
        raise ScfError(f"restricted SCF needs an even electron count, got {num_electrons}")
    num_occupied = num_electrons // 2

    hcore = t_matrix + v_matrix
    s_values, s_vectors = np.linalg.eigh(s_matrix)
    if s_values.min() <= 1e-10:
        raise ScfError(f"overlap matrix is numerically singular (min eigenvalue {s_values.min():.3e})")
    orthogonalizer = s_vectors @ np.diag(s_values**-0.5) @ s_vectors.T

    def solve(fock):
        f_prime = orthogonalizer.T @ fock @ orthogonalizer
        energies, vectors = np.linalg.eigh(f_prime)
        coeffs = orthogonalizer @ vectors
        occupied = coeffs[:, :num_occupied]
        return energies, coeffs, 2.0 * occupied @ occupied.T

    energies, coeffs, density = solve(hcore)
    previous_energy = 0.0
    fock_history: list[np.ndarray] = []
    error_history: list[np.ndarray] = []

    for iteration in range(1, max_iterations + 1):
        fock = _fock_matrix(hcore, density, eri)
        # DIIS residual in the orthonormal basis
        residual = orthogonalizer.T @ (fock @ density @ s_matrix - s_matrix @ density @ fock) @ orthogonalizer
        fock_history.append(fock)
        error_history.append(residual)
        if len(fock_history) > diis_depth:
            fock_history.pop(0)
            error_history.pop(0)

        if len(fock_history) > 1:
            k = len(fock_history)
            b_matrix = -np.ones((k + 1, k + 1))
            b_matrix[k, k] = 0.0
            for i in range(k):
                for j in range(k):
                    b_matrix[i, j] = float(np.sum(error_history[i] * error_history[j]))
            rhs = np.zeros(k + 1)
            rhs[k] = -1.0
            try:
                weights = np.linalg.solve(b_matrix, rhs)[:k]
                fock = sum(w * f for w, f in zip(weights, fock_history))
            except np.linalg.LinAlgError:
                pass  # fall back to the plain Fock matrix this cycle

        energies, coeffs, density = solve(fock)
        energy = 0.5 * float(np.sum(density * (hcore + _fock_matrix(hcore, density, eri))))
        residual_norm = float(np.max(np.abs(error_history[-1])))
        if abs(energy - previous_energy) < energy_tol and residual_norm < residual_tol:
            return ScfResult(energy, energy_nuclear, energies, coeffs, iteration)
        previous_energy = energy

    raise ScfError(
        f"SCF failed to converge in {max_iterations} iterations "
        f"(last energy change {abs(energy - previous_energy):.3e}, residual {residual_norm:.3e})"
    )
