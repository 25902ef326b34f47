# Radius of non-singularity of a 2x2 matrix, computed exactly.
#
# The interval [A - eps*Delta, A + eps*Delta] stays non-singular for every
# eps below d(A, Delta). For a rank-one Delta = delta v^T the radius is 1/r,
# where r maximizes v^T T_z A^{-1} T_y delta over sign vectors z, y.
import numpy as np

from iqmv import decompose_rank1, determinant, invert, radius, signs_from_bits, singular_witness
from iqmv.radius import cost_bilinear

A = np.array([[1.0, -1.0], [0.0, 1.0]])
Delta = np.ones((2, 2))

print("A^{-1} =\n", invert(A))
r1 = decompose_rank1(Delta)
print("Delta = delta v^T with delta =", r1.delta, "and v =", r1.v)

# Every sign pair as a 4-bit string: bits 1..2 give z, bits 3..4 give y.
Ainv = invert(A)
for k in range(16):
    bits = format(k, "04b")
    print(bits, cost_bilinear(Ainv, r1, signs_from_bits(bits)))

report = radius(A, Delta)
print(f"\nr = {report.r}, d = {report.d:.6f}, maximizer {report.best_bit_string}")

# The maximizing sign pair hands us a singular matrix on the boundary.
W = singular_witness(A, Delta, signs_from_bits(report.best_bit_string), report.r)
print("witness =\n", W)
print("det(witness) =", determinant(W))

# Scaling Delta by c shrinks the radius by c.
for c in (2.0, 10.0):
    print(f"d(A, {c} Delta) = {radius(A, c * Delta).d:.6f}")
