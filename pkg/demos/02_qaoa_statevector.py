# QAOA for the same 2x2 problem on the built-in statevector simulator.
#
# Four qubits encode (z, y). The problem Hamiltonian is diagonal; its value on
# basis state |x> is the bilinear cost of the sign pair x encodes. Gradient
# ascent tunes (beta, gamma) and the final state is sampled.
import sys

import numpy as np

from iqmv import QaoaConfig, build_problem_hamiltonian, decompose_rank1, extract_solution, invert, optimize
from iqmv.files import write_histogram
from iqmv.optimizer import objective
from iqmv.simulator import run_circuit

A = np.array([[1.0, -1.0], [0.0, 1.0]])
Delta = np.ones((2, 2))

H = build_problem_hamiltonian(invert(A), decompose_rank1(Delta))
print("H_P terms (i, j, c_ij):", H.terms)
print("diagonal of H_P:", H.diagonal)

config = QaoaConfig(p=2, restarts=10, seed=7)
params, trace = optimize(H, config)
print(f"\nbest objective {objective(H, params):.4f} after {len(trace)} iterations")
print("beta =", params.beta, "gamma =", params.gamma)

probs = np.abs(run_circuit(H, params.beta, params.gamma)) ** 2
best, hist = extract_solution(H, params, shots=100, seed=7)

print("\nstring  prob   counts")
for k in np.argsort(-probs, kind="stable"):
    bits = format(k, "04b")
    count = hist.counts.get(bits, 0)
    print(f"{bits}   {probs[k]:.3f}  {count:4d} {'#' * count}")

print(f"\ncandidate {best.bit_string} with cost {best.classical_cost} -> d = {1 / best.classical_cost:.6f}")

if len(sys.argv) > 1:
    write_histogram(hist, sys.argv[1])
    print("counts written to", sys.argv[1])
