"""Geometry-to-Hamiltonian pipeline and the H2O grid generator.

Produces Hamiltonian JSON files in the format shared with the VQE toolkit:
``{"num_qubits": N, "terms": [{"pauli": ..., "coeff": ...}], "metadata": ...}``.
The phi-grid manifest doubles as a ready-to-run sweep spec for that toolkit.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .active_space import active_space_integrals, mo_integrals
from .basis import BOHR_PER_ANGSTROM, build_basis, nuclear_repulsion
from .integrals import integral_tables
from .jordan_wigner import QubitOperator, hartree_fock_expectation, jordan_wigner
from .scf import restricted_hartree_fock

BASIS_NAME = "sto-3g"
MAPPING_NAME = "jordan-wigner (interleaved alpha/beta spin orbitals)"


@dataclass(frozen=True)
class H2OGeometry:
    """Water geometry: O-H bond length R (Angstrom), H-O-H angle phi (radians)."""

    R: float
    phi: float
    active_electrons: int | None = 4
    active_orbitals: int | None = 4

    def __post_init__(self):
        if self.R <= 0:
            raise ValueError(f"R must be positive, got {self.R}")
        # pi itself is admitted: the reference angle grid runs to 180 degrees
        if not 0.0 < self.phi <= math.pi:
            raise ValueError(f"phi must lie in (0, pi], got {self.phi}")
        if self.active_electrons is not None and self.active_electrons < 1:
            raise ValueError("active_electrons must be positive")
        if self.active_orbitals is not None and self.active_orbitals < 1:
            raise ValueError("active_orbitals must be positive")

    def atoms(self):
        """O at the origin, first O-H bond on the x axis, molecule in z=0."""
        r_bohr = self.R * BOHR_PER_ANGSTROM
        return [
            ("O", (0.0, 0.0, 0.0)),
            ("H", (r_bohr, 0.0, 0.0)),
            ("H", (r_bohr * math.cos(self.phi), r_bohr * math.sin(self.phi), 0.0)),
        ]


def molecule_to_qubit_operator(
    atoms,
    num_electrons: int,
    active_electrons: int | None = None,
    active_orbitals: int | None = None,
):
    """Full pipeline: integrals -> RHF -> active space -> Jordan-Wigner.

    Returns (operator, info dict with SCF energies for the metadata block).
    """
    basis = build_basis(atoms)
    s_matrix, t_matrix, v_matrix, eri = integral_tables(basis, atoms)
    e_nuclear = nuclear_repulsion(atoms)
    scf = restricted_hartree_fock(s_matrix, t_matrix, v_matrix, eri, num_electrons, e_nuclear)
    hcore_mo, eri_mo = mo_integrals(t_matrix + v_matrix, eri, scf.coefficients)
    integrals = active_space_integrals(
        hcore_mo, eri_mo, num_electrons, active_electrons, active_orbitals,
        nuclear_repulsion=e_nuclear,
    )
    operator = jordan_wigner(integrals)

    active = active_electrons if active_electrons is not None else num_electrons
    hf_energy = hartree_fock_expectation(operator, active)
    if abs(hf_energy - scf.energy_total) > 1e-8:
        raise RuntimeError(
            f"Hartree-Fock expectation of the qubit operator ({hf_energy:.10f}) "
            f"does not reproduce the SCF energy ({scf.energy_total:.10f})"
        )
    info = {
        "num_basis_functions": len(basis),
        "num_electrons": num_electrons,
        "scf_energy_hartree": scf.energy_total,
        "nuclear_repulsion_hartree": e_nuclear,
        "scf_iterations": scf.iterations,
    }
    return operator, info


def write_operator(operator: QubitOperator, path, metadata: dict) -> Path:
    path = Path(path)
    payload = {
        "num_qubits": operator.num_qubits,
        "terms": [
            {"pauli": string, "coeff": float(coefficient.real)}
            for string, coefficient in sorted(operator.terms.items())
        ],
        "metadata": metadata,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    return path


def generate_h2o(geometry: H2OGeometry, out_path) -> Path:
    """Build the H2O qubit Hamiltonian for one geometry and write it as JSON.

    The 4-electron/4-orbital default active space yields 8 qubits; passing
    ``active_electrons=None, active_orbitals=None`` uses the full STO-3G
    space (14 qubits).
    """
    operator, info = molecule_to_qubit_operator(
        geometry.atoms(),
        num_electrons=10,
        active_electrons=geometry.active_electrons,
        active_orbitals=geometry.active_orbitals,
    )
    metadata = {
        "backend": f"chemgen {__version__} (built-in minimal RHF backend)",
        "basis": BASIS_NAME,
        "mapping": MAPPING_NAME,
        "molecule": "H2O",
        "geometry": {
            "R_angstrom": geometry.R,
            "phi_radians": geometry.phi,
            "active_electrons": geometry.active_electrons,
            "active_orbitals": geometry.active_orbitals,
        },
        **info,
    }
    return write_operator(operator, out_path, metadata)


def _grid_worker(task):
    index, r_value, phi, active_electrons, active_orbitals, out_dir = task
    degrees = math.degrees(phi)
    name = f"phi_{index:02d}_{degrees:g}deg.json"
    try:
        geometry = H2OGeometry(r_value, phi, active_electrons, active_orbitals)
        generate_h2o(geometry, Path(out_dir) / name)
        return index, phi, name, None
    except Exception as exc:
        return index, phi, name, str(exc)


def generate_phi_grid(
    r_value: float,
    phi_list,
    out_dir,
    active_electrons: int | None = 4,
    active_orbitals: int | None = 4,
    jobs: int = 1,
    optimizer: dict | None = None,
    restarts: int = 5,
    seed: int = 7,
) -> Path:
    """One Hamiltonian file per angle plus a manifest usable as a sweep spec.

    Angles are radians.  Failed points are recorded in the manifest's
    ``failures`` list and excluded from the grid, so the manifest always
    runs unedited.  The default optimizer block mirrors the reference
    protocol for this scan: parameter shift, eta=0.8, 100 iterations,
    best-of-5 restarts.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tasks = [
        (index, r_value, phi, active_electrons, active_orbitals, str(out_dir))
        for index, phi in enumerate(phi_list)
    ]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_grid_worker, tasks))
    else:
        outcomes = [_grid_worker(task) for task in tasks]

    grid = []
    paths = []
    failures = []
    for index, phi, name, error in outcomes:
        if error is None:
            grid.append(phi)
            paths.append(name)
        else:
            failures.append({"index": index, "phi_radians": phi, "error": error})

    manifest = {
        "variable": "phi",
        "grid": grid,
        "source": {"kind": "files", "paths": paths},
        "optimizer": optimizer or {"method": "ps", "eta": 0.8, "iterations": 100},
        "layers": 1,
        "topology": "chain",
        "restarts": restarts,
        "seed": seed,
        "metadata": {
            "backend": f"chemgen {__version__}",
            "molecule": "H2O",
            "R_angstrom": r_value,
            "active_electrons": active_electrons,
            "active_orbitals": active_orbitals,
            "failures": failures,
        },
    }
    manifest_path = out_dir / "phi_manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=1) + "\n", encoding="utf-8")
    return manifest_path
