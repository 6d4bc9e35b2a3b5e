"""vqelab: a dense-statevector VQE laboratory.

Pauli-string Hamiltonians with exact diagonalization, a layered Rx/Rz/CZ
ansatz simulator, exact and shot-sampled energy estimation, four
gradient-descent variants (FOGD, SOGD, SPSA, parameter shift), and sweep
harnesses for molecular energy curves.
"""

from .circuit import (
    AnsatzCircuit,
    Statevector,
    apply_cz,
    apply_rx,
    apply_rz,
    build_ansatz,
    run,
)
from .estimator import (
    EnergyEstimate,
    EnergyFunction,
    EstimatorConfig,
    expectation_exact,
    expectation_sampled,
)
from .molecules import (
    CoefficientTable,
    HeHCoefficients,
    SweepResult,
    SweepSpec,
    build_heh_hamiltonian,
    grid_from_range,
    load_coefficient_table,
    load_sweep_spec,
    run_sweep,
    sample_table_path,
    write_sweep_csv,
)
from .optimizer import (
    OptimizationAbort,
    OptimizationTrace,
    OptimizerConfig,
    SpsaSchedule,
    export_trace,
    gd_step,
    grad_fogd,
    grad_ps,
    grad_sogd,
    grad_spsa,
    init_params,
    run_vqe,
)
from .pauli import (
    Hamiltonian,
    PauliTerm,
    SchemaError,
    Spectrum,
    ground_energy_exact,
    load_hamiltonian,
    parse_pauli_string,
    save_hamiltonian,
    to_matrix,
)

__version__ = "0.1.0"
