"""He-H+ Hamiltonian construction, coefficient tables, and sweep experiments.

The He-H+ Hamiltonian is the two-qubit operator
H = 1/2 [Jx(XI+IX) + Jz(ZI+IZ) + Jxx XX + Jzz ZZ + Jxz(XZ+ZX) + C], with
coefficients that depend on the bond length R and are ingested from CSV
tables (the repo ships a clearly-synthetic sample; no shipped number is
physical truth).  Sweeps evaluate a grid of Hamiltonians point by point:
exact ground energy against best-of-restarts VQE energy.
"""

from __future__ import annotations

import concurrent.futures
import csv
import dataclasses
import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .circuit import TOPOLOGIES, build_ansatz
from .optimizer import OptimizerConfig, config_from_dict, run_vqe
from .pauli import Hamiltonian, SchemaError, ground_energy_exact, load_hamiltonian

TABLE_COLUMNS = ("R", "Jx", "Jz", "Jxx", "Jzz", "Jxz", "C")

#: Grid values and table keys match when they differ by at most this.
GRID_ATOL = 1e-9


@dataclass(frozen=True)
class HeHCoefficients:
    """One row of a He-H+ coefficient table (R in Angstrom, rest in Hartree)."""

    R: float
    Jx: float
    Jz: float
    Jxx: float
    Jzz: float
    Jxz: float
    C: float

    def __post_init__(self):
        if self.R <= 0:
            raise ValueError(f"R must be positive, got {self.R}")
        for name in ("Jx", "Jz", "Jxx", "Jzz", "Jxz", "C"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"non-finite coefficient {name}")


def build_heh_hamiltonian(coefficients: HeHCoefficients) -> Hamiltonian:
    """The two-qubit He-H+ Hamiltonian for one coefficient row.

    All nine Pauli strings (eight non-identity plus the identity carrying
    C) enter with the global 1/2 prefactor.  Zero coefficients drop their
    terms during normalization.
    """
    c = coefficients
    return Hamiltonian(
        2,
        [
            ("XI", 0.5 * c.Jx),
            ("IX", 0.5 * c.Jx),
            ("ZI", 0.5 * c.Jz),
            ("IZ", 0.5 * c.Jz),
            ("XX", 0.5 * c.Jxx),
            ("ZZ", 0.5 * c.Jzz),
            ("XZ", 0.5 * c.Jxz),
            ("ZX", 0.5 * c.Jxz),
            ("II", 0.5 * c.C),
        ],
    )


class CoefficientTable:
    """Rows of He-H+ coefficients keyed by strictly increasing R."""

    def __init__(self, rows):
        rows = tuple(rows)
        if not rows:
            raise SchemaError("coefficient table has no rows")
        for previous, current in zip(rows, rows[1:]):
            if current.R <= previous.R + GRID_ATOL:
                raise SchemaError(
                    f"table R values must be strictly increasing: "
                    f"{previous.R} followed by {current.R}"
                )
        self.rows = rows

    def __len__(self):
        return len(self.rows)

    @property
    def grid(self) -> list[float]:
        return [row.R for row in self.rows]

    def lookup(self, R: float) -> HeHCoefficients:
        """Exact-match lookup; interpolation is deliberately unsupported."""
        for row in self.rows:
            if abs(row.R - R) <= GRID_ATOL:
                return row
        raise KeyError(f"no table row at R={R!r} (exact grid match required)")


def load_coefficient_table(path) -> CoefficientTable:
    """Read a coefficient CSV with header R,Jx,Jz,Jxx,Jzz,Jxz,C.

    Raises:
        SchemaError: on a missing/misnamed column, non-numeric cell,
            non-monotone R, or duplicate R.
    """
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(row for row in handle if not row.startswith("#"))
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if tuple(h.strip() for h in header) != TABLE_COLUMNS:
            raise SchemaError(
                f"{path}: header must be {','.join(TABLE_COLUMNS)}, got {','.join(header)}"
            )
        rows = []
        for lineno, cells in enumerate(reader, start=2):
            if not cells:
                continue
            if len(cells) != len(TABLE_COLUMNS):
                raise SchemaError(f"{path}:{lineno}: expected {len(TABLE_COLUMNS)} cells")
            try:
                values = [float(cell) for cell in cells]
            except ValueError as exc:
                raise SchemaError(f"{path}:{lineno}: {exc}") from exc
            try:
                rows.append(HeHCoefficients(*values))
            except ValueError as exc:
                raise SchemaError(f"{path}:{lineno}: {exc}") from exc
    try:
        return CoefficientTable(rows)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def sample_table_path() -> Path:
    """Path of the synthetic sample He-H+ coefficient table shipped for tests."""
    return Path(str(resources.files(__package__) / "data" / "sample_heh_coefficients.csv"))


@dataclass(frozen=True)
class TableSource:
    """Grid values are bond lengths looked up in a coefficient table."""

    path: str


@dataclass(frozen=True)
class FileSource:
    """One Hamiltonian JSON file per grid point, in grid order."""

    paths: tuple[str, ...]


@dataclass(frozen=True)
class SweepSpec:
    variable: str  # "R" | "phi"
    grid: tuple[float, ...]
    source: TableSource | FileSource
    optimizer: OptimizerConfig = dataclasses.field(default_factory=OptimizerConfig)
    layers: int = 1
    topology: str = "chain"
    restarts: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.variable not in ("R", "phi"):
            raise ValueError(f"variable must be 'R' or 'phi', got {self.variable!r}")
        if not self.grid:
            raise ValueError("grid must be non-empty")
        if self.topology not in TOPOLOGIES:
            raise ValueError(f"unknown topology {self.topology!r}")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if isinstance(self.source, FileSource) and len(self.source.paths) != len(self.grid):
            raise ValueError(
                f"{len(self.source.paths)} files for {len(self.grid)} grid points"
            )


def grid_from_range(start: float, stop: float, step: float) -> tuple[float, ...]:
    """floor((stop-start)/step)+1 evenly spaced values, endpoints to 1e-9."""
    if step <= 0:
        raise ValueError("step must be > 0")
    if stop < start:
        raise ValueError("stop must be >= start")
    count = int(math.floor((stop - start) / step + GRID_ATOL)) + 1
    return tuple(start + i * step for i in range(count))


def load_sweep_spec(path) -> SweepSpec:
    """Load a sweep spec (or a generator manifest in the same schema) from JSON.

    Relative source paths are resolved against the spec file's directory.

    Raises:
        SchemaError: on any schema violation.
    """
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(payload, dict):
        raise SchemaError(f"{path}: top level must be a JSON object")

    try:
        variable = payload["variable"]
        raw_grid = payload["grid"]
        raw_source = payload["source"]
    except KeyError as exc:
        raise SchemaError(f"{path}: missing required key {exc}") from exc

    if isinstance(raw_grid, dict):
        try:
            grid = grid_from_range(
                float(raw_grid["start"]), float(raw_grid["stop"]), float(raw_grid["step"])
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"{path}: bad grid range: {exc}") from exc
    elif isinstance(raw_grid, list) and raw_grid:
        grid = tuple(float(v) for v in raw_grid)
    else:
        raise SchemaError(f"{path}: grid must be a non-empty list or a start/stop/step object")

    if not isinstance(raw_source, dict) or "kind" not in raw_source:
        raise SchemaError(f"{path}: source must be an object with a 'kind'")
    base = path.parent
    if raw_source["kind"] == "heh_table":
        source = TableSource(str(base / raw_source.get("path", "")))
    elif raw_source["kind"] == "files":
        paths = raw_source.get("paths")
        if not isinstance(paths, list) or not paths:
            raise SchemaError(f"{path}: files source needs a non-empty 'paths' list")
        source = FileSource(tuple(str(base / p) for p in paths))
    else:
        raise SchemaError(f"{path}: unknown source kind {raw_source['kind']!r}")

    try:
        optimizer = config_from_dict(payload.get("optimizer", {}))
        return SweepSpec(
            variable=variable,
            grid=grid,
            source=source,
            optimizer=optimizer,
            layers=int(payload.get("layers", 1)),
            topology=payload.get("topology", "chain"),
            restarts=int(payload.get("restarts", 5)),
            seed=int(payload.get("seed", 0)),
        )
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{path}: {exc}") from exc


@dataclass(frozen=True)
class SweepPoint:
    grid_value: float
    exact_energy: float | None
    vqe_energy: float | None
    converged: bool | None
    seed: int | None
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    variable: str
    points: tuple[SweepPoint, ...]

    def argmin_exact(self) -> SweepPoint:
        ok = [p for p in self.points if p.exact_energy is not None]
        return min(ok, key=lambda p: p.exact_energy)

    def argmin_vqe(self) -> SweepPoint:
        ok = [p for p in self.points if p.vqe_energy is not None]
        return min(ok, key=lambda p: p.vqe_energy)


def derive_seed(root_seed: int, index: int, restart: int) -> int:
    """Deterministic per-(point, restart) seed, independent of execution order."""
    seq = np.random.SeedSequence(root_seed, spawn_key=(index, restart))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def _run_point(task) -> SweepPoint:
    index, grid_value, hamiltonian, spec = task
    try:
        exact = ground_energy_exact(hamiltonian).ground_energy
        circuit = build_ansatz(hamiltonian.num_qubits, spec.layers, spec.topology)
        best_energy = math.inf
        best_seed = None
        for restart in range(spec.restarts):
            seed = derive_seed(spec.seed, index, restart)
            config = dataclasses.replace(spec.optimizer, seed=seed)
            trace = run_vqe(hamiltonian, circuit, config, reference=exact)
            if trace.final_energy < best_energy:
                best_energy = trace.final_energy
                best_seed = seed
        converged = best_energy <= exact + spec.optimizer.convergence_tol
        return SweepPoint(grid_value, exact, best_energy, converged, best_seed)
    except Exception as exc:  # recorded, never aborts the sweep
        return SweepPoint(grid_value, None, None, None, None, error=str(exc))


def _resolve_hamiltonians(spec: SweepSpec):
    """Yield (index, grid_value, Hamiltonian | None, error | None)."""
    if isinstance(spec.source, TableSource):
        try:
            table = load_coefficient_table(spec.source.path)
        except SchemaError:
            raise
        for index, value in enumerate(spec.grid):
            try:
                yield index, value, build_heh_hamiltonian(table.lookup(value)), None
            except KeyError as exc:
                yield index, value, None, str(exc)
    else:
        for index, (value, file_path) in enumerate(zip(spec.grid, spec.source.paths)):
            try:
                yield index, value, load_hamiltonian(file_path), None
            except (OSError, SchemaError) as exc:
                yield index, value, None, str(exc)


def run_sweep(spec: SweepSpec, jobs: int = 1) -> SweepResult:
    """Evaluate every grid point: exact ground energy vs best-of-restarts VQE.

    Points are independent; with jobs > 1 they run in a process pool.
    Results are ordered by grid index and are deterministic for a fixed
    (spec, seed) regardless of the worker count.  Per-point failures are
    recorded in the corresponding point, not raised.
    """
    tasks = []
    failed = {}
    for index, value, hamiltonian, error in _resolve_hamiltonians(spec):
        if error is not None:
            failed[index] = SweepPoint(value, None, None, None, None, error=error)
        else:
            tasks.append((index, value, hamiltonian, spec))

    points: dict[int, SweepPoint] = dict(failed)
    if jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for task, point in zip(tasks, pool.map(_run_point, tasks)):
                points[task[0]] = point
    else:
        for task in tasks:
            points[task[0]] = _run_point(task)

    ordered = tuple(points[i] for i in range(len(spec.grid)))
    return SweepResult(spec.variable, ordered)


def write_sweep_csv(result: SweepResult, path) -> Path:
    """CSV export: grid_value,exact_energy,vqe_energy,converged,seed.

    Failed points keep their grid value, carry empty energy/seed cells, and
    mark the converged column 'failed'.  Floats use round-trip precision.
    """
    path = Path(path)
    lines = ["grid_value,exact_energy,vqe_energy,converged,seed"]
    for p in result.points:
        if p.error is not None:
            lines.append(f"{p.grid_value!r},,,failed,")
        else:
            converged = "true" if p.converged else "false"
            lines.append(
                f"{p.grid_value!r},{p.exact_energy!r},{p.vqe_energy!r},{converged},{p.seed}"
            )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_sweep_csv(path, variable: str = "R") -> SweepResult:
    """Parse a file written by ``write_sweep_csv`` back into a SweepResult."""
    path = Path(path)
    points = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if header != ["grid_value", "exact_energy", "vqe_energy", "converged", "seed"]:
            raise SchemaError(f"{path}: unexpected header {header}")
        for cells in reader:
            if not cells:
                continue
            if cells[3] == "failed":
                points.append(
                    SweepPoint(float(cells[0]), None, None, None, None, error="failed")
                )
            else:
                points.append(
                    SweepPoint(
                        float(cells[0]),
                        float(cells[1]),
                        float(cells[2]),
                        cells[3] == "true",
                        int(cells[4]),
                    )
                )
    return SweepResult(variable, tuple(points))
