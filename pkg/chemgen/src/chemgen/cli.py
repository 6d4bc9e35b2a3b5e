"""chemgen command line: H2O qubit-Hamiltonian export.

Subcommands: ``h2o`` (one geometry -> one file) and ``h2o-grid`` (bond-angle
scan -> one file per angle plus a sweep-spec manifest).
"""

from __future__ import annotations

import argparse
import math
import sys

from .pipeline import H2OGeometry, generate_h2o, generate_phi_grid
from .scf import ScfError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chemgen", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_h2o = sub.add_parser("h2o", help="export one H2O Hamiltonian")
    p_h2o.add_argument("--R", type=float, required=True, help="O-H bond length (Angstrom)")
    p_h2o.add_argument("--phi", type=float, required=True, help="H-O-H angle (radians)")
    p_h2o.add_argument("--active-electrons", type=int, default=4)
    p_h2o.add_argument("--active-orbitals", type=int, default=4)
    p_h2o.add_argument("--full-space", action="store_true",
                       help="no active-space restriction (14 qubits for STO-3G H2O)")
    p_h2o.add_argument("--out", required=True)

    p_grid = sub.add_parser("h2o-grid", help="export a bond-angle grid + manifest")
    p_grid.add_argument("--R", type=float, required=True, help="O-H bond length (Angstrom)")
    p_grid.add_argument("--phi-start", type=float, required=True, help="degrees")
    p_grid.add_argument("--phi-stop", type=float, required=True, help="degrees")
    p_grid.add_argument("--phi-step", type=float, required=True, help="degrees")
    p_grid.add_argument("--active-electrons", type=int, default=4)
    p_grid.add_argument("--active-orbitals", type=int, default=4)
    p_grid.add_argument("--jobs", type=int, default=1)
    p_grid.add_argument("--out-dir", required=True)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.subcommand == "h2o":
            if args.full_space:
                geometry = H2OGeometry(args.R, args.phi, None, None)
            else:
                geometry = H2OGeometry(
                    args.R, args.phi, args.active_electrons, args.active_orbitals
                )
            path = generate_h2o(geometry, args.out)
            print(f"wrote {path}")
            return 0

        if args.phi_step <= 0:
            print("error: --phi-step must be > 0", file=sys.stderr)
            return 1
        count = int(math.floor((args.phi_stop - args.phi_start) / args.phi_step + 1e-9)) + 1
        phi_list = [math.radians(args.phi_start + i * args.phi_step) for i in range(count)]
        manifest = generate_phi_grid(
            args.R, phi_list, args.out_dir,
            active_electrons=args.active_electrons,
            active_orbitals=args.active_orbitals,
            jobs=args.jobs,
        )
        print(f"wrote {count}-point grid, manifest {manifest}")
        return 0
    except (ValueError, ScfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
