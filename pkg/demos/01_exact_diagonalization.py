"""Exact ground-state energies of Pauli-string Hamiltonians.

Builds a few operators by hand, diagonalizes them, and round-trips one
through the JSON file format used by the rest of the toolkit.
"""

import tempfile
from pathlib import Path

import numpy as np

from vqelab import Hamiltonian, ground_energy_exact, load_hamiltonian, save_hamiltonian, to_matrix

# Single-qubit warm-ups: Z and X have ground energy -1.
for label in ("Z", "X"):
    h = Hamiltonian(1, [(label, 1.0)])
    spectrum = ground_energy_exact(h)
    print(f"H = {label}: ground energy {spectrum.ground_energy:+.6f}, "
          f"ground state {np.round(spectrum.ground_state.amplitudes, 6)}")

# A transverse-field pair: ZZ coupling with X fields.
h = Hamiltonian(2, [("ZZ", -1.0), ("XI", -0.5), ("IX", -0.5)])
print("\nH = -ZZ - 0.5(XI + IX)")
print("dense matrix:\n", np.round(to_matrix(h).real, 3))
spectrum = ground_energy_exact(h)
print("ground energy:", spectrum.ground_energy)

# The same Hamiltonian through the file format.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "pair.json"
    save_hamiltonian(h, path)
    print("\nserialized to", path.name, "and loaded back:",
          load_hamiltonian(path) == h)

# Eigenvalue check against the full spectrum.
eigenvalues = np.linalg.eigvalsh(to_matrix(h))
print("full spectrum:", np.round(eigenvalues, 6))
print("ground energy is the smallest eigenvalue:",
      np.isclose(spectrum.ground_energy, eigenvalues[0]))
