"""Tour of the quadratic Fourier family F_ra.

Builds the d = 6 showcase matrix in exact phase arithmetic, factors it
through the diagonal Gaussian matrix, and evaluates its trace both
directly and through the closed-form Gauss sum.
"""

from fractions import Fraction
from math import sqrt

import numpy as np

from mubkit import (dra_matrix, fra_matrix, forward, gauss_sum, inverse,
                    is_generalized_hadamard, parseval_check, trace_fra)
from mubkit.cli import matrix_payload, render_document, document

d = 6
f = fra_matrix(d, 0, 2)
print("F_02 in dimension 6, entries as powers of q = exp(i pi/3):\n")
print(render_document(document("matrix", {"kind": "fra", "d": d, "r": "0", "a": 2},
                               matrix_payload(f)), "pretty"))

print("\nGaussian factorization: D_02 @ F equals F_02 exactly ->",
      dra_matrix(d, 0, 2) @ fra_matrix(d) == f)

print(f"\ndirect trace        {f.trace():.12f}")
print(f"closed-form trace   {trace_fra(d, 0, 2):.12f}")
print(f"expected sqrt(6)    {sqrt(6):.12f}")
print(f"underlying Gauss sum S(0, 12, 6) = {gauss_sum(0, 12, 6):.6f}")

print("\ngeneralized Hadamard?", bool(is_generalized_hadamard(f)))

rng = np.random.default_rng(1)
x = rng.normal(size=d) + 1j * rng.normal(size=d)
y = forward(x, d, Fraction(1, 2), 3)
print("\nround trip |inverse(forward(x)) - x| =",
      float(np.max(np.abs(inverse(y, d, Fraction(1, 2), 3) - x))))
lhs, rhs = parseval_check(x, x, d, Fraction(1, 2), 3)
print(f"energy conservation: {lhs.real:.9f} vs {rhs.real:.9f}")
