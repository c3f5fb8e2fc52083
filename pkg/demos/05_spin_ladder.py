"""From two q-deformed oscillators to su(2): the cyclic operator v_ra,
the polar decomposition of the ladder operators, and the overlap law of
the cyclic eigenbases.
"""

from fractions import Fraction

import numpy as np

from mubkit import (build_vra_quonic, eigenbasis, eigenvalue_vra,
                    overlap_same_a, restrict_to_j, su2_generators, vra_matrix)

k = 4
j = Fraction(k - 1, 2)
print(f"two oscillators at k = {k} give the spin j = {j} subspace\n")

v_full = build_vra_quonic(k, Fraction(1, 3), 2)
got = restrict_to_j(v_full, j)
want = vra_matrix(k, Fraction(1, 3), 2).to_complex()
print("restricted oscillator-built v equals the direct band matrix:",
      float(np.max(np.abs(got - want))))

kth = np.linalg.matrix_power(v_full, k)
print("(v)^k is a global phase on the whole tensor space:",
      float(np.max(np.abs(kth - kth[0, 0] * np.eye(k * k)))))

triple = su2_generators(j, 0, 0)
print("\nstandard ladder matrices at r = a = 0 (Condon-Shortley):")
with np.printoptions(precision=4, suppress=True):
    print("j_+ =\n", triple.j_plus.real)
    print("j_z diagonal:", np.diag(triple.j_z).real)

vecs = eigenbasis(j, 0, 1)
v = restrict_to_j(build_vra_quonic(k, 0, 1), j)
lam = eigenvalue_vra(j, 0, 1, 2)
print("\neigenvector check |v vec - lambda vec| =",
      float(np.max(np.abs(v @ vecs[2] - lam * vecs[2]))))

direct = complex(np.vdot(eigenbasis(j, 0, 0)[1], eigenbasis(j, Fraction(1, 2), 0)[2]))
closed = overlap_same_a(j, 0, Fraction(1, 2), 0, 1, 2)
print(f"\noverlap across r-values: direct {direct:.9f}")
print(f"                          closed {closed:.9f}")
