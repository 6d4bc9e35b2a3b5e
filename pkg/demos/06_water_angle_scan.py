"""H2O bond-angle scan from externally generated Hamiltonian files.

The primary toolkit never performs chemistry: per-angle Hamiltonians come
from the companion chemgen package (or any tool emitting the shared JSON
format) as a manifest that doubles as a sweep spec:

    chemgen h2o-grid --R 1.9 --phi-start 5 --phi-stop 180 --phi-step 5 \
        --out-dir h2o_grid

Point this demo at the manifest it writes.  The full 36-point scan with
best-of-5 restarts is the heavyweight experiment of the suite; pass a
manifest with fewer points for a quick look.
"""

import sys
from pathlib import Path

from vqelab import load_sweep_spec, run_sweep, write_sweep_csv

if len(sys.argv) != 2:
    print(__doc__)
    print("usage: python 06_water_angle_scan.py PATH/TO/phi_manifest.json")
    raise SystemExit(0)

manifest = Path(sys.argv[1])
spec = load_sweep_spec(manifest)
print(f"loaded {len(spec.grid)}-point {spec.variable}-scan from {manifest}")
print(f"optimizer: {spec.optimizer.method}, {spec.optimizer.iterations} iterations, "
      f"eta={spec.optimizer.eta}, best-of-{spec.restarts}")

result = run_sweep(spec, jobs=2)
out = Path("h2o_angle_scan.csv")
write_sweep_csv(result, out)
print(f"wrote {out}")

succeeded = [p for p in result.points if p.error is None]
print(f"{len(succeeded)}/{len(result.points)} points succeeded")
if succeeded:
    best = result.argmin_exact()
    print(f"exact curve minimum at phi = {best.grid_value:.4f} rad "
          f"(E = {best.exact_energy:+.6f})")
    close = sum(
        1 for p in succeeded if p.vqe_energy - p.exact_energy <= 5e-2
    )
    print(f"VQE within 5e-2 Hartree of exact at {close}/{len(succeeded)} points")
