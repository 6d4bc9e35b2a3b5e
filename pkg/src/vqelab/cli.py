"""Command-line front end: exact diagonalization, VQE runs, sweeps, validation.

Exit codes: 0 success, 1 usage or schema error, 2 runtime failure.  Every
run echoes its fully resolved configuration (defaults included) as a
``# config`` line so any output can be reproduced from its own log.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import molecules, optimizer, pauli
from .circuit import TOPOLOGIES, build_ansatz
from .estimator import EstimatorConfig
from .optimizer import OptimizerConfig, OptimizationAbort, config_to_dict, export_trace, run_vqe

JOBS_ENV_VAR = "VQELAB_JOBS"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _format_energy(value: float) -> str:
    return np.format_float_positional(value, precision=10, unique=False, fractional=False)


def _echo_config(payload: dict) -> None:
    print(f"# config {json.dumps(payload, sort_keys=True)}")


def build_parser() -> _Parser:
    parser = _Parser(prog="vqelab", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_exact = sub.add_parser("exact", help="exact ground energy of a Hamiltonian file")
    p_exact.add_argument("hamiltonian", help="Hamiltonian JSON file")
    p_exact.add_argument("--dump-state", metavar="PATH", default=None,
                         help="also write the ground-state amplitudes as JSON")

    p_vqe = sub.add_parser("vqe", help="single VQE optimization run")
    p_vqe.add_argument("hamiltonian", help="Hamiltonian JSON file")
    p_vqe.add_argument("--method", choices=optimizer.METHODS, default="ps")
    p_vqe.add_argument("--eta", type=float, default=0.8)
    p_vqe.add_argument("--iters", type=int, default=None,
                       help="default: 20 for 2-qubit Hamiltonians, 100 otherwise")
    p_vqe.add_argument("--layers", type=int, default=1)
    p_vqe.add_argument("--topology", choices=TOPOLOGIES, default="chain")
    p_vqe.add_argument("--estimator", choices=("exact", "sampled"), default="exact")
    p_vqe.add_argument("--shots", type=int, default=None,
                       help="sample count; implies --estimator sampled")
    p_vqe.add_argument("--init", choices=optimizer.INIT_STRATEGIES, default="random")
    p_vqe.add_argument("--seed", type=int, default=0)
    p_vqe.add_argument("--restarts", type=int, default=1)
    p_vqe.add_argument("--fd-step", type=float, default=None)
    p_vqe.add_argument("--out", default="vqe_trace.csv")
    p_vqe.add_argument("--reference", choices=("none", "exact"), default="none")

    p_sweep = sub.add_parser("sweep", help="run a sweep spec (R- or phi-scan)")
    p_sweep.add_argument("spec", help="sweep spec JSON file")
    p_sweep.add_argument("--jobs", type=int, default=None,
                         help=f"parallel points (default: ${JOBS_ENV_VAR} or cpu count)")
    p_sweep.add_argument("--out", default="sweep.csv")

    p_validate = sub.add_parser("validate", help="check a data file against its schema")
    p_validate.add_argument("path", help="Hamiltonian JSON, coefficient CSV, or sweep spec")

    return parser


def cmd_exact(args) -> int:
    hamiltonian = pauli.load_hamiltonian(args.hamiltonian)
    _echo_config({
        "subcommand": "exact",
        "hamiltonian": args.hamiltonian,
        "dump_state": args.dump_state,
        "num_qubits": hamiltonian.num_qubits,
        "terms": len(hamiltonian.terms),
    })
    spectrum = pauli.ground_energy_exact(hamiltonian)
    if args.dump_state:
        amplitudes = spectrum.ground_state.amplitudes
        Path(args.dump_state).write_text(
            json.dumps({
                "num_qubits": hamiltonian.num_qubits,
                "real": [float(a.real) for a in amplitudes],
                "imag": [float(a.imag) for a in amplitudes],
            }, indent=1) + "\n",
            encoding="utf-8",
        )
    print(_format_energy(spectrum.ground_energy))
    return EXIT_OK


def _vqe_config(args, num_qubits: int) -> OptimizerConfig:
    iterations = args.iters
    if iterations is None:
        iterations = 20 if num_qubits == 2 else 100
    mode = args.estimator
    shots = args.shots
    if shots is not None:
        mode = "sampled"
    else:
        shots = 8192
    return OptimizerConfig(
        method=args.method,
        eta=args.eta,
        iterations=iterations,
        fd_step=args.fd_step,
        init=args.init,
        seed=args.seed,
        estimator=EstimatorConfig(mode=mode, shots=shots, seed=args.seed),
    )


def cmd_vqe(args) -> int:
    hamiltonian = pauli.load_hamiltonian(args.hamiltonian)
    config = _vqe_config(args, hamiltonian.num_qubits)
    circuit = build_ansatz(hamiltonian.num_qubits, args.layers, args.topology)
    _echo_config({
        "subcommand": "vqe",
        "hamiltonian": args.hamiltonian,
        "layers": args.layers,
        "topology": args.topology,
        "restarts": args.restarts,
        "reference": args.reference,
        "out": args.out,
        "optimizer": config_to_dict(config),
    })

    reference = None
    if args.reference == "exact":
        reference = pauli.ground_energy_exact(hamiltonian).ground_energy

    best_trace = None
    best_config = None
    for restart in range(args.restarts):
        seed = args.seed if args.restarts == 1 else molecules.derive_seed(args.seed, 0, restart)
        run_config = dataclasses.replace(config, seed=seed)
        try:
            trace = run_vqe(hamiltonian, circuit, run_config, reference=reference)
        except OptimizationAbort as exc:
            export_trace(exc.trace, run_config, args.out)
            print(f"aborted: {exc}", file=sys.stderr)
            print(f"partial trace written to {args.out}", file=sys.stderr)
            return EXIT_RUNTIME
        if best_trace is None or trace.final_energy < best_trace.final_energy:
            best_trace, best_config = trace, run_config

    export_trace(best_trace, best_config, args.out)
    print(f"final_energy = {best_trace.final_energy!r}")
    print(f"best_seed = {best_config.seed}")
    if reference is not None:
        print(f"exact_energy = {reference!r}")
        print(f"gap = {best_trace.final_energy - reference!r}")
    print(f"trace_csv = {args.out}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = molecules.load_sweep_spec(args.spec)
    jobs = args.jobs if args.jobs else _default_jobs()
    _echo_config({
        "subcommand": "sweep",
        "spec": args.spec,
        "variable": spec.variable,
        "points": len(spec.grid),
        "layers": spec.layers,
        "topology": spec.topology,
        "restarts": spec.restarts,
        "seed": spec.seed,
        "jobs": jobs,
        "out": args.out,
        "optimizer": config_to_dict(spec.optimizer),
    })
    result = molecules.run_sweep(spec, jobs=jobs)
    molecules.write_sweep_csv(result, args.out)

    succeeded = [p for p in result.points if p.error is None]
    for point in result.points:
        if point.error is not None:
            print(
                f"point {spec.variable}={point.grid_value!r} failed: {point.error}",
                file=sys.stderr,
            )
    if not succeeded:
        print("all sweep points failed", file=sys.stderr)
        return EXIT_RUNTIME

    best = result.argmin_vqe()
    best_exact = result.argmin_exact()
    print(f"argmin_vqe {spec.variable} = {best.grid_value!r}")
    print(f"argmin_vqe energy = {best.vqe_energy!r}")
    print(f"argmin_exact {spec.variable} = {best_exact.grid_value!r}")
    print(f"argmin_exact energy = {best_exact.exact_energy!r}")
    print(f"csv = {args.out}")
    return EXIT_OK


def cmd_validate(args) -> int:
    path = Path(args.path)
    try:
        if path.suffix.lower() == ".csv":
            table = molecules.load_coefficient_table(path)
            print(f"OK coefficient table: {len(table)} rows")
            return EXIT_OK
        payload = json.loads(path.read_text(encoding="utf-8"))
        if isinstance(payload, dict) and "num_qubits" in payload:
            hamiltonian = pauli.load_hamiltonian(path)
            print(
                f"OK hamiltonian: {hamiltonian.num_qubits} qubits, "
                f"{len(hamiltonian.terms)} terms"
            )
            return EXIT_OK
        if isinstance(payload, dict) and "variable" in payload:
            spec = molecules.load_sweep_spec(path)
            print(f"OK sweep spec: {len(spec.grid)} {spec.variable} points")
            return EXIT_OK
        print(f"{path}: unrecognized schema (not a Hamiltonian, table, or sweep spec)",
              file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, pauli.SchemaError) as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "exact": cmd_exact,
        "vqe": cmd_vqe,
        "sweep": cmd_sweep,
        "validate": cmd_validate,
    }[args.subcommand]
    try:
        code = handler(args)
    except pauli.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    except (OSError, ValueError, KeyError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_RUNTIME
    return code


if __name__ == "__main__":
    sys.exit(main())
