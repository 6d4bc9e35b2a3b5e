"""chemgen: minimal quantum-chemistry exporter for qubit Hamiltonians.

Self-contained STO-3G restricted Hartree-Fock, active-space reduction, and
Jordan-Wigner mapping; writes the Hamiltonian JSON format consumed by the
vqelab toolkit.
"""

__version__ = "0.1.0"

from .jordan_wigner import QubitOperator, hartree_fock_expectation, jordan_wigner
from .pipeline import H2OGeometry, generate_h2o, generate_phi_grid, molecule_to_qubit_operator
from .scf import ScfError
