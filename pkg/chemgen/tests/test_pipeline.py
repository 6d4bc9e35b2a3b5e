"""Pipeline and CLI: geometry handling, file emission, the shared-format contract."""

import json
import math
import subprocess

import numpy as np
import pytest

from chemgen.cli import main
from chemgen.pipeline import H2OGeometry, generate_h2o, generate_phi_grid


def vqelab_validate(path):
    """The consumer toolkit's schema check, through its real CLI."""
    return subprocess.run(
        ["vqelab", "validate", str(path)], capture_output=True, text=True
    )


class TestGeometry:
    def test_atom_positions(self):
        geometry = H2OGeometry(1.0, math.pi / 2)
        atoms = geometry.atoms()
        assert atoms[0] == ("O", (0.0, 0.0, 0.0))
        r_bohr = 1.0 / 0.529177210903
        assert atoms[1][1] == pytest.approx((r_bohr, 0.0, 0.0))
        x, y, z = atoms[2][1]
        assert x == pytest.approx(0.0, abs=1e-12)
        assert y == pytest.approx(r_bohr)
        assert z == 0.0

    def test_linear_angle_admitted(self):
        H2OGeometry(1.0, math.pi)  # 180 degrees is on the reference grid

    @pytest.mark.parametrize("kwargs", [
        {"R": 0.0, "phi": 1.75},
        {"R": -1.0, "phi": 1.75},
        {"R": 1.9, "phi": 0.0},
        {"R": 1.9, "phi": 3.2},
        {"R": 1.9, "phi": 1.75, "active_electrons": 0},
        {"R": 1.9, "phi": 1.75, "active_orbitals": -1},
    ])
    def test_invalid_geometry_rejected(self, kwargs):
        with pytest.raises(ValueError):
            H2OGeometry(**kwargs)


class TestGenerateH2O:
    def test_active_space_file(self, tmp_path):
        out = tmp_path / "h2o.json"
        generate_h2o(H2OGeometry(1.9, 1.75), out)
        payload = json.loads(out.read_text())
        assert payload["num_qubits"] == 8
        assert payload["metadata"]["basis"] == "sto-3g"
        assert payload["metadata"]["geometry"]["R_angstrom"] == 1.9
        coeffs = [t["coeff"] for t in payload["terms"]]
        assert all(isinstance(c, float) and math.isfinite(c) for c in coeffs)

    def test_file_passes_consumer_validate(self, tmp_path):
        out = tmp_path / "h2o.json"
        generate_h2o(H2OGeometry(1.9, 1.75), out)
        result = vqelab_validate(out)
        assert result.returncode == 0, result.stderr
        assert "OK hamiltonian: 8 qubits" in result.stdout

    def test_deterministic_output(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        generate_h2o(H2OGeometry(1.9, 1.75), a)
        generate_h2o(H2OGeometry(1.9, 1.75), b)
        assert a.read_bytes() == b.read_bytes()


class TestGeneratePhiGrid:
    def test_small_grid_and_manifest(self, tmp_path):
        phis = [math.radians(d) for d in (95.0, 100.0, 105.0)]
        manifest_path = generate_phi_grid(1.0, phis, tmp_path, jobs=2)
        manifest = json.loads(manifest_path.read_text())
        assert manifest["variable"] == "phi"
        assert manifest["grid"] == pytest.approx(phis)
        assert len(manifest["source"]["paths"]) == 3
        for name in manifest["source"]["paths"]:
            assert (tmp_path / name).exists()
        assert manifest["metadata"]["failures"] == []

    def test_empty_grid(self, tmp_path):
        manifest_path = generate_phi_grid(1.0, [], tmp_path)
        manifest = json.loads(manifest_path.read_text())
        assert manifest["grid"] == []
        assert manifest["source"]["paths"] == []

    def test_manifest_consumed_by_sweep_unedited(self, tmp_path):
        phis = [math.radians(d) for d in (95.0, 105.0)]
        manifest_path = generate_phi_grid(
            1.0, phis, tmp_path,
            optimizer={"method": "ps", "eta": 0.8, "iterations": 5},
            restarts=1,
        )
        out = tmp_path / "sweep.csv"
        result = subprocess.run(
            ["vqelab", "sweep", str(manifest_path), "--jobs", "1", "--out", str(out)],
            capture_output=True, text=True,
        )
        assert result.returncode == 0, result.stderr
        lines = out.read_text().strip().split("\n")
        assert len(lines) == 3  # header + 2 points
        for line in lines[1:]:
            cells = line.split(",")
            assert cells[3] in ("true", "false")
            assert float(cells[2]) >= float(cells[1]) - 1e-9  # variational

    def test_failed_point_recorded_in_manifest(self, tmp_path, monkeypatch):
        import chemgen.pipeline as pipeline

        real = pipeline.generate_h2o

        def flaky(geometry, out_path):
            if abs(geometry.phi - 2.0) < 1e-12:
                raise RuntimeError("synthetic backend failure")
            return real(geometry, out_path)

        monkeypatch.setattr(pipeline, "generate_h2o", flaky)
        manifest_path = pipeline.generate_phi_grid(1.0, [1.5, 2.0], tmp_path, jobs=1)
        manifest = json.loads(manifest_path.read_text())
        assert len(manifest["grid"]) == 1
        assert len(manifest["metadata"]["failures"]) == 1
        assert "synthetic backend failure" in manifest["metadata"]["failures"][0]["error"]


class TestCli:
    def test_h2o_subcommand(self, tmp_path, capsys):
        out = tmp_path / "w.json"
        code = main(["h2o", "--R", "1.9", "--phi", "1.75", "--out", str(out)])
        assert code == 0
        assert json.loads(out.read_text())["num_qubits"] == 8

    def test_h2o_grid_subcommand(self, tmp_path, capsys):
        code = main([
            "h2o-grid", "--R", "1.0", "--phi-start", "95", "--phi-stop", "105",
            "--phi-step", "5", "--jobs", "2", "--out-dir", str(tmp_path),
        ])
        assert code == 0
        manifest = json.loads((tmp_path / "phi_manifest.json").read_text())
        assert len(manifest["grid"]) == 3
        assert manifest["grid"][0] == pytest.approx(math.radians(95))

    def test_invalid_geometry_exits_1(self, tmp_path, capsys):
        code = main(["h2o", "--R", "-1", "--phi", "1.75", "--out", str(tmp_path / "x.json")])
        assert code == 1

    def test_zero_step_exits_1(self, tmp_path, capsys):
        code = main([
            "h2o-grid", "--R", "1.0", "--phi-start", "5", "--phi-stop", "10",
            "--phi-step", "0", "--out-dir", str(tmp_path),
        ])
        assert code == 1
