"""The VQE loop: gradient descent with four interchangeable gradient estimators.

Methods: ``fogd`` (forward finite difference), ``sogd`` (central finite
difference), ``spsa`` (simultaneous perturbation), ``ps`` (parameter shift).
FOGD/SOGD/PS use a constant learning rate; SPSA uses the decaying gain
sequence eta_k = a / (k + 1 + A)**alpha with perturbation size
c_k = c / (k + 1)**gamma.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .circuit import AnsatzCircuit, run
from .estimator import EnergyFunction, EstimatorConfig, expectation_exact, expectation_sampled
from .pauli import Hamiltonian

METHODS = ("fogd", "sogd", "spsa", "ps")
INIT_STRATEGIES = ("random", "small", "zero")

#: Default finite-difference steps, balancing truncation error against the
#: exact estimator's ~1e-10 noise floor.
DEFAULT_FD_STEP = {"fogd": 1e-6, "sogd": 1e-4}


@dataclass(frozen=True)
class SpsaSchedule:
    """Gain-sequence constants for SPSA.

    ``a=None`` calibrates the numerator so the first step size equals the
    configured learning rate; ``stability=None`` resolves to
    0.1 * iterations.  All constants are exposed because SPSA tuning is the
    method's known difficulty.
    """

    a: float | None = None
    stability: float | None = None  # the additive constant A
    alpha: float = 0.602
    c: float = 0.2
    gamma: float = 0.101

    def resolve(self, eta: float, iterations: int) -> "SpsaSchedule":
        stability = 0.1 * iterations if self.stability is None else self.stability
        a = eta * (1.0 + stability) ** self.alpha if self.a is None else self.a
        return dataclasses.replace(self, a=a, stability=stability)

    def step_size(self, k: int) -> float:
        return self.a / (k + 1 + self.stability) ** self.alpha

    def perturbation(self, k: int) -> float:
        return self.c / (k + 1) ** self.gamma


@dataclass(frozen=True)
class OptimizerConfig:
    method: str = "ps"
    eta: float = 0.8
    iterations: int = 20
    fd_step: float | None = None
    spsa: SpsaSchedule = field(default_factory=SpsaSchedule)
    init: str = "random"
    small_init_eps: float = 0.1
    seed: int = 0
    estimator: EstimatorConfig = field(default_factory=EstimatorConfig)
    convergence_tol: float = 0.1

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.init not in INIT_STRATEGIES:
            raise ValueError(f"init must be one of {INIT_STRATEGIES}, got {self.init!r}")
        if self.eta <= 0:
            raise ValueError("eta must be > 0")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.fd_step is not None and self.fd_step <= 0:
            raise ValueError("fd_step must be > 0")


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    energy: float
    parameters: np.ndarray
    evaluations: int


@dataclass
class OptimizationTrace:
    """Per-iteration energy record, including the initial point.

    ``records[k].evaluations`` is the cumulative count of energy evaluations
    consumed by the optimizer through iteration k (gradient probes only;
    the recorded energies themselves are diagnostics outside that budget).
    """

    records: list[TraceRecord]
    final_energy: float = math.nan
    converged: bool | None = None

    def energies(self) -> np.ndarray:
        return np.array([r.energy for r in self.records])


class OptimizationAbort(RuntimeError):
    """An estimator or gradient failure aborted a run; carries the partial trace."""

    def __init__(self, message: str, trace: OptimizationTrace):
        super().__init__(message)
        self.trace = trace


def gd_step(theta: np.ndarray, grad: np.ndarray, eta: float) -> np.ndarray:
    """One gradient-descent update: theta - eta * grad, componentwise."""
    theta = np.asarray(theta, dtype=float)
    grad = np.asarray(grad, dtype=float)
    if theta.shape != grad.shape:
        raise ValueError(f"shape mismatch: theta {theta.shape}, grad {grad.shape}")
    if not np.all(np.isfinite(grad)):
        raise ValueError("gradient contains non-finite entries")
    return theta - eta * grad


def grad_fogd(energy_fn, theta: np.ndarray, h: float) -> np.ndarray:
    """Forward finite difference: (E(theta + h e_i) - E(theta)) / h.

    Costs dim + 1 energy evaluations.
    """
    if h <= 0:
        raise ValueError("h must be > 0")
    theta = np.asarray(theta, dtype=float)
    base = energy_fn(theta)
    grad = np.empty_like(theta)
    for i in range(theta.size):
        shifted = theta.copy()
        shifted[i] += h
        grad[i] = (energy_fn(shifted) - base) / h
    _check_finite(grad)
    return grad


def grad_sogd(energy_fn, theta: np.ndarray, h: float) -> np.ndarray:
    """Central finite difference: (E(theta + h e_i) - E(theta - h e_i)) / 2h.

    Costs 2 * dim energy evaluations.
    """
    if h <= 0:
        raise ValueError("h must be > 0")
    theta = np.asarray(theta, dtype=float)
    grad = np.empty_like(theta)
    for i in range(theta.size):
        plus = theta.copy()
        plus[i] += h
        minus = theta.copy()
        minus[i] -= h
        grad[i] = (energy_fn(plus) - energy_fn(minus)) / (2.0 * h)
    _check_finite(grad)
    return grad


def grad_ps(energy_fn, theta: np.ndarray) -> np.ndarray:
    """Parameter-shift gradient: (E(theta + pi/2 e_i) - E(theta - pi/2 e_i)) / 2.

    Exact for rotations with Pauli generators (every slot of the layered
    ansatz).  Costs 2 * dim energy evaluations.
    """
    theta = np.asarray(theta, dtype=float)
    shift = math.pi / 2.0
    grad = np.empty_like(theta)
    for i in range(theta.size):
        plus = theta.copy()
        plus[i] += shift
        minus = theta.copy()
        minus[i] -= shift
        grad[i] = (energy_fn(plus) - energy_fn(minus)) / 2.0
    _check_finite(grad)
    return grad


def grad_spsa(
    energy_fn,
    theta: np.ndarray,
    k: int,
    schedule: SpsaSchedule,
    rng: np.random.Generator,
) -> np.ndarray:
    """Simultaneous-perturbation gradient estimate at iteration k.

    Draws one +-1 direction for all components and probes both sides,
    so the cost is exactly 2 energy evaluations regardless of dimension.
    """
    theta = np.asarray(theta, dtype=float)
    delta = rng.integers(0, 2, size=theta.size) * 2.0 - 1.0
    ck = schedule.perturbation(k)
    diff = energy_fn(theta + ck * delta) - energy_fn(theta - ck * delta)
    grad = diff / (2.0 * ck) * delta  # 1/delta_i == delta_i for +-1 entries
    _check_finite(grad)
    return grad


def _check_finite(grad: np.ndarray) -> None:
    if not np.all(np.isfinite(grad)):
        raise ValueError("gradient contains non-finite entries")


def init_params(
    num_qubits: int,
    num_layers: int,
    strategy: str = "random",
    rng: np.random.Generator | None = None,
    small_eps: float = 0.1,
) -> np.ndarray:
    """Initial parameter vector of length 2N(M+1) for the layered ansatz.

    random: uniform on [0, 2pi) per entry; small: uniform on [0, small_eps);
    zero: all zeros (the circuit then prepares |0...0> exactly).
    """
    if strategy not in INIT_STRATEGIES:
        raise ValueError(f"unknown init strategy {strategy!r}")
    size = 2 * num_qubits * (num_layers + 1)
    if strategy == "zero":
        return np.zeros(size)
    if rng is None:
        rng = np.random.default_rng()
    if strategy == "random":
        return rng.uniform(0.0, 2.0 * math.pi, size)
    return rng.uniform(0.0, small_eps, size)


def run_vqe(
    hamiltonian: Hamiltonian,
    circuit: AnsatzCircuit,
    config: OptimizerConfig,
    reference: float | None = None,
) -> OptimizationTrace:
    """Minimize <psi(theta)|H|psi(theta)> for a fixed number of iterations.

    The trace holds iterations + 1 records (the initial point included).
    ``converged`` is final_energy <= reference + convergence_tol when a
    reference energy is supplied, else None.

    Raises:
        OptimizationAbort: on estimator or gradient failure; the partial
            trace accumulated so far is attached to the exception.
    """
    if circuit.num_qubits != hamiltonian.num_qubits:
        raise ValueError(
            f"circuit has {circuit.num_qubits} qubits, Hamiltonian {hamiltonian.num_qubits}"
        )

    root = np.random.SeedSequence(config.seed)
    init_ss, spsa_ss, estimator_ss, diagnostic_ss = root.spawn(4)
    theta = init_params(
        circuit.num_qubits,
        circuit.num_layers,
        config.init,
        np.random.default_rng(init_ss),
        config.small_init_eps,
    )
    energy_fn = EnergyFunction(
        hamiltonian, circuit, config.estimator, np.random.default_rng(estimator_ss)
    )
    spsa_rng = np.random.default_rng(spsa_ss)
    diagnostic_rng = np.random.default_rng(diagnostic_ss)
    schedule = config.spsa.resolve(config.eta, config.iterations)
    fd_step = config.fd_step or DEFAULT_FD_STEP.get(config.method)

    def diagnostic_energy(params) -> float:
        # Monitoring only: not charged to the optimizer's evaluation budget.
        state = run(circuit, params)
        if config.estimator.mode == "exact":
            return expectation_exact(state, hamiltonian)
        estimate = expectation_sampled(
            state, hamiltonian, config.estimator.shots, diagnostic_rng
        )
        return estimate.value

    trace = OptimizationTrace(records=[])
    trace.records.append(TraceRecord(0, diagnostic_energy(theta), theta.copy(), 0))

    for k in range(config.iterations):
        try:
            if config.method == "fogd":
                grad = grad_fogd(energy_fn, theta, fd_step)
                eta_k = config.eta
            elif config.method == "sogd":
                grad = grad_sogd(energy_fn, theta, fd_step)
                eta_k = config.eta
            elif config.method == "ps":
                grad = grad_ps(energy_fn, theta)
                eta_k = config.eta
            else:
                grad = grad_spsa(energy_fn, theta, k, schedule, spsa_rng)
                eta_k = schedule.step_size(k)
            theta = gd_step(theta, grad, eta_k)
        except ValueError as exc:
            trace.final_energy = trace.records[-1].energy
            raise OptimizationAbort(f"iteration {k}: {exc}", trace) from exc
        trace.records.append(
            TraceRecord(
                k + 1, diagnostic_energy(theta), theta.copy(), energy_fn.evaluations_used
            )
        )

    trace.final_energy = trace.records[-1].energy
    if reference is not None:
        trace.converged = trace.final_energy <= reference + config.convergence_tol
    return trace


def export_trace(trace: OptimizationTrace, config: OptimizerConfig, path) -> Path:
    """Write a trace as CSV (iteration,energy,evaluations) plus a JSON sidecar.

    The sidecar (same stem, .json suffix) holds the full resolved config,
    the seed, and the final parameter vector, so a run is reproducible from
    its own output.
    """
    path = Path(path)
    lines = ["iteration,energy,evaluations"]
    for record in trace.records:
        lines.append(f"{record.iteration},{record.energy!r},{record.evaluations}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    sidecar = {
        "config": config_to_dict(config),
        "seed": config.seed,
        "final_energy": trace.final_energy,
        "converged": trace.converged,
        "final_parameters": [float(v) for v in trace.records[-1].parameters],
    }
    sidecar_path = path.with_suffix(".json")
    sidecar_path.write_text(json.dumps(sidecar, indent=1) + "\n", encoding="utf-8")
    return path


def config_to_dict(config: OptimizerConfig) -> dict:
    out = dataclasses.asdict(config)
    out["spsa"] = dataclasses.asdict(config.spsa.resolve(config.eta, config.iterations))
    out["estimator"] = dataclasses.asdict(config.estimator)
    if config.fd_step is None:
        out["fd_step"] = DEFAULT_FD_STEP.get(config.method)
    return out


def config_from_dict(payload: dict) -> OptimizerConfig:
    """Inverse of ``config_to_dict`` (tolerates missing keys -> defaults)."""
    kwargs = dict(payload)
    if "spsa" in kwargs and isinstance(kwargs["spsa"], dict):
        kwargs["spsa"] = SpsaSchedule(**kwargs["spsa"])
    if "estimator" in kwargs and isinstance(kwargs["estimator"], dict):
        kwargs["estimator"] = EstimatorConfig(**kwargs["estimator"])
    valid = {f.name for f in dataclasses.fields(OptimizerConfig)}
    unknown = set(kwargs) - valid
    if unknown:
        raise ValueError(f"unknown optimizer config keys: {sorted(unknown)}")
    return OptimizerConfig(**kwargs)
