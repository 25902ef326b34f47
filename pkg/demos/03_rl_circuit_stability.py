# Robust stability of a symmetric RL-circuit system matrix.
#
# A non-singular symmetric interval containing one stable member is stable
# throughout, so the radius of non-singularity bounds how much uncertainty
# the system tolerates.
import numpy as np

from iqmv import ProblemSpec, QaoaConfig, symmetric_eigenvalues, verify_stable_symmetric
from iqmv.radius import radius

A = np.array([[-2.0, 2.0, 0.0], [2.0, -5.0, 3.0], [0.0, 3.0, -7.0]])
Delta = np.ones((3, 3))

print("eigenvalues of A:", symmetric_eigenvalues(A))

exact = radius(A, Delta, "brute")
print(f"exact r = {exact.r:.4f}, d = {exact.d:.6f}, maximizer {exact.best_bit_string}")

qaoa = radius(A, Delta, "qaoa", QaoaConfig(seed=7))
print(f"QAOA  r = {qaoa.r:.4f} from sampled string {qaoa.best_bit_string}")
print("\nmost frequent strings:")
for bits, count in sorted(qaoa.histogram.items(), key=lambda kv: (-kv[1], kv[0]))[:5]:
    print(f"  {bits}  {count}")

print("\neps    decision")
for eps in (0.1, 0.2, 0.24, 0.25, 0.3):
    rep = verify_stable_symmetric(ProblemSpec(A, Delta, eps, "both", QaoaConfig(seed=7)))
    print(f"{eps:<6} {rep.decision.value:<13} {rep.caveat}")
