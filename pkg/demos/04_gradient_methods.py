"""The four gradient estimators and their circuit-call economy.

On a single-qubit problem E(theta) = cos(theta) every estimator can be
compared against the analytic derivative.  The cost table at the end is
the reason SPSA exists: two probes per step regardless of dimension.
"""

import math

import numpy as np

from vqelab import (
    Hamiltonian,
    OptimizerConfig,
    build_ansatz,
    grad_fogd,
    grad_ps,
    grad_sogd,
    grad_spsa,
    run_vqe,
)
from vqelab.estimator import EnergyFunction
from vqelab.optimizer import SpsaSchedule

# E(theta_rx, theta_rz) = <Z> = cos(theta_rx): analytic gradient available.
fn = EnergyFunction(Hamiltonian(1, [("Z", 1.0)]), build_ansatz(1, 0))
theta = np.array([1.1, 0.0])
analytic = -math.sin(theta[0])

print(f"analytic dE/dtheta at {theta[0]}: {analytic:+.12f}\n")
print(f"fogd(h=1e-6): {grad_fogd(fn, theta, 1e-6)[0]:+.12f}")
print(f"sogd(h=1e-4): {grad_sogd(fn, theta, 1e-4)[0]:+.12f}")
print(f"ps          : {grad_ps(fn, theta)[0]:+.12f}")
schedule = SpsaSchedule().resolve(eta=0.8, iterations=20)
spsa = grad_spsa(fn, theta, 0, schedule, np.random.default_rng(0))
print(f"spsa (one draw, both components perturbed): {np.round(spsa, 6)}")

# Central differences gain two orders of accuracy over forward ones.
for h in (1e-2, 1e-3, 1e-4):
    fogd_err = abs(grad_fogd(fn, theta, h)[0] - analytic)
    sogd_err = abs(grad_sogd(fn, theta, h)[0] - analytic)
    print(f"h={h:.0e}:  |fogd err|={fogd_err:.2e}  |sogd err|={sogd_err:.2e}")

# Evaluation economy on a 32-parameter problem (N=8, M=1).
print("\nper-iteration energy evaluations on N=8, M=1 (dim=32):")
rng = np.random.default_rng(5)
strings = ["".join(rng.choice(list("IXZ"), 8)) for _ in range(6)]
h8 = Hamiltonian(8, [(s, float(c)) for s, c in zip(strings, rng.uniform(-0.3, 0.3, 6))])
circuit8 = build_ansatz(8, 1)
for method in ("fogd", "sogd", "ps", "spsa"):
    config = OptimizerConfig(method=method, iterations=2, seed=1)
    trace = run_vqe(h8, circuit8, config)
    per_iter = trace.records[1].evaluations - trace.records[0].evaluations
    print(f"  {method:4s}: {per_iter:3d}")
