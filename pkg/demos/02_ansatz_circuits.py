"""The layered Rx/Rz/CZ ansatz and its parameter layout.

Shows the closed forms of the three gates, the 2N(M+1) slot-count law,
and the difference between the chain and ring entangler topologies.
"""

import math

import numpy as np

from vqelab import Statevector, apply_cz, apply_rx, apply_rz, build_ansatz, run

# Rotation gates: Rx(pi)|0> = -i|1>, Rz only shifts phases.
state = apply_rx(Statevector(1), 0, math.pi)
print("Rx(pi)|0>      =", np.round(state.amplitudes, 6))
state = apply_rx(Statevector(1), 0, math.pi / 2)
print("Rx(pi/2)|0>    =", np.round(state.amplitudes, 6))
plus = Statevector(1, [math.sqrt(0.5), math.sqrt(0.5)])
print("Rz(pi)|+>      =", np.round(apply_rz(plus, 0, math.pi).amplitudes, 6))

# CZ negates only the |11> amplitude.
bell_like = Statevector(2, np.full(4, 0.5))
print("CZ on uniform  =", np.round(apply_cz(bell_like, 0, 1).amplitudes, 3))

# Slot-count law: parameters = 2N(M+1).
print("\nparameter counts:")
for n, m in [(2, 1), (3, 2), (8, 1), (8, 8)]:
    circuit = build_ansatz(n, m)
    print(f"  N={n} M={m}: {circuit.num_parameters} slots")

# Topologies differ only in the closing CZ edge.
for topology in ("chain", "ring"):
    circuit = build_ansatz(4, 1, topology)
    pairs = [g.qubits for g in circuit.program if g.kind == "cz"]
    print(f"{topology:5s} entangler on 4 qubits: {pairs}")

# All-zero parameters leave |0...0> untouched (CZ fixes it, rotations idle).
circuit = build_ansatz(3, 2)
state = run(circuit, np.zeros(circuit.num_parameters))
print("\nrun with zero parameters returns |000>:", state.amplitudes[0] == 1.0)

# A random parameter vector produces a normalized entangled state.
rng = np.random.default_rng(1)
state = run(circuit, rng.uniform(0, 2 * math.pi, circuit.num_parameters))
print("random parameters: norm =", round(state.norm(), 12))
