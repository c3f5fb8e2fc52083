"""Complete sets of mutually unbiased bases in prime dimension, the
Gauss-sum route to their inner products, and what breaks at d = 6.
"""

from math import sqrt

import numpy as np

from mubkit import (gauss_inner_product, mub_prime, mub_three,
                    max_pairwise_deviation, product_hadamard, unbiasedness)

p = 5
ms = mub_prime(p, 0)
print(f"p = {p}: {len(ms.bases)} bases ({', '.join(b.label for b in ms.bases)})")
print("worst pairwise unbiasedness deviation:", max_pairwise_deviation(ms))

direct = complex(np.vdot(ms.bases[0].column(1), ms.bases[3].column(2)))
closed = gauss_inner_product(p, 0, 0, 1, 3, 2)
print(f"\ninner product <0,1|3,2>: direct {direct:.9f}")
print(f"                        Gauss   {closed:.9f}")
print(f"modulus vs 1/sqrt(5):   {abs(direct):.9f} vs {1 / sqrt(5):.9f}")

print("\n-- composite dimension d = 6 --")
triple = mub_three(6, 0, 0)
print("guaranteed triple (a=0, a=1, computational), worst deviation:",
      max_pairwise_deviation(triple))
b00 = triple.bases[0]
b02 = mub_three(6, 0, 2).bases[0]
print("but label stride two fails hard:",
      f"deviation(B_00, B_02) = {unbiasedness(b00, b02):.6f}")
_, adjacent = product_hadamard(6, 0, 0, 1)
_, stride2 = product_hadamard(6, 0, 0, 2)
print("Fourier product Hadamard verdicts: adjacent", bool(adjacent),
      "| stride two", bool(stride2))
