"""Molecular-orbital integrals, frozen-core reduction, and spin-orbital tensors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class ActiveSpaceIntegrals:
    """Spin-orbital integrals of the active-space Hamiltonian.

    H = core_energy
        + sum_{PQ} one_body[P, Q] a+_P a_Q
        + 1/2 sum_{PQRS} two_body[P, Q, R, S] a+_P a+_Q a_S a_R

    with two_body in physicists' <PQ|RS> ordering.  Spin orbitals interleave
    spin: P = 2p for alpha and 2p + 1 for beta of spatial orbital p.
    """

    core_energy: float
    one_body: np.ndarray
    two_body: np.ndarray

    @property
    def num_spin_orbitals(self) -> int:
        return self.one_body.shape[0]


def mo_integrals(hcore_ao, eri_ao, coefficients):
    """Transform AO integrals to the MO basis (chemists' (pq|rs) for the ERI)."""
    hcore_mo = coefficients.T @ hcore_ao @ coefficients
    eri_mo = np.einsum(
        "pi,qj,rk,sl,pqrs->ijkl",
        coefficients, coefficients, coefficients, coefficients, eri_ao,
        optimize=True,
    )
    return hcore_mo, eri_mo


def active_space_integrals(
    hcore_mo: np.ndarray,
    eri_mo: np.ndarray,
    num_electrons: int,
    active_electrons: int | None = None,
    active_orbitals: int | None = None,
    nuclear_repulsion: float = 0.0,
) -> ActiveSpaceIntegrals:
    """Freeze core orbitals and restrict to an active window of spatial MOs.

    With no restriction the full orbital space is used.  The frozen core
    consists of the (num_electrons - active_electrons) / 2 lowest MOs, fully
    occupied; their mean-field contribution folds into the core energy and
    the effective one-body operator.
    """
    num_orbitals = hcore_mo.shape[0]
    if active_electrons is None:
        active_electrons = num_electrons
    if active_orbitals is None:
        active_orbitals = num_orbitals - (num_electrons - active_electrons) // 2

    if active_electrons < 1 or active_electrons > num_electrons:
        raise ValueError(f"active_electrons must be in [1, {num_electrons}]")
    if (num_electrons - active_electrons) % 2 != 0:
        raise ValueError("core electron count must be even (closed-shell core)")
    num_core = (num_electrons - active_electrons) // 2
    if num_core + active_orbitals > num_orbitals:
        raise ValueError(
            f"{num_core} core + {active_orbitals} active orbitals exceed "
            f"the {num_orbitals}-orbital space"
        )
    if active_electrons > 2 * active_orbitals:
        raise ValueError("more active electrons than active spin orbitals")

    core = list(range(num_core))
    active = list(range(num_core, num_core + active_orbitals))

    core_energy = nuclear_repulsion
    for i in core:
        core_energy += 2.0 * hcore_mo[i, i]
        for j in core:
            core_energy += 2.0 * eri_mo[i, i, j, j] - eri_mo[i, j, j, i]

    effective = hcore_mo[np.ix_(active, active)].copy()
    for a, t in enumerate(active):
        for b, u in enumerate(active):
            for i in core:
                effective[a, b] += 2.0 * eri_mo[t, u, i, i] - eri_mo[t, i, i, u]

    eri_active = eri_mo[np.ix_(active, active, active, active)]
    return ActiveSpaceIntegrals(
        core_energy,
        _spin_one_body(effective),
        _spin_two_body(eri_active),
    )


def _spin_one_body(h_spatial: np.ndarray) -> np.ndarray:
    n = h_spatial.shape[0]
    h_spin = np.zeros((2 * n, 2 * n))
    h_spin[0::2, 0::2] = h_spatial
    h_spin[1::2, 1::2] = h_spatial
    return h_spin


def _spin_two_body(eri_spatial: np.ndarray) -> np.ndarray:
    """Physicists' <PQ|RS> spin-orbital tensor from chemists' (pr|qs)."""
    n = eri_spatial.shape[0]
    two = np.zeros((2 * n,) * 4)
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    value = eri_spatial[p, r, q, s]  # <pq|rs> = (pr|qs)
                    if value == 0.0:
                        continue
                    for sigma in (0, 1):
                        for tau in (0, 1):
                            two[2 * p + sigma, 2 * q + tau, 2 * r + sigma, 2 * s + tau] = value
    return two
