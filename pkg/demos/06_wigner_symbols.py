"""Coupling coefficients in the cyclic quantization scheme: 3-jm values,
the f-bar symbol and its symmetry laws.  Spins are passed as doubled
integers, so (1, 1, 2) below means j1 = j2 = 1/2, j3 = 1.
"""

import numpy as np

from mubkit import (basis_change_coeff, cg_alpha, fbar,
                    fbar_conjugation_factor, wigner_3jm)

print("3-jm (1 1 0; 1 -1 0) =", wigner_3jm(2, 2, 0, 2, -2, 0),
      " (= 1/sqrt(3))")

tj = (2, 2, 2)   # j1 = j2 = j3 = 1
alpha = (0, 1, 2)
value = fbar(*tj, *alpha)
print(f"\nfbar(j=1,1,1; alpha=0,1,2) = {value:.9f}")

odd = fbar(tj[1], tj[0], tj[2], alpha[1], alpha[0], alpha[2])
sign = (-1) ** (sum(tj) // 2)
print(f"odd column permutation      = {odd:.9f}")
print("parity law (-1)^(j1+j2+j3) satisfied:", abs(odd - sign * value) < 1e-12)

factor = fbar_conjugation_factor(*tj, *alpha)
print("conjugation law satisfied:",
      abs(np.conj(value) - factor * value) < 1e-12)

print("\ncoupling coefficients in the cyclic scheme (two-qubit singlet):")
print("  alpha = (0, 0):", cg_alpha(1, 1, 0, 0, 0, 0),
      " (zero: the flat phase vector is symmetric)")
print("  alpha = (0, 1):", cg_alpha(1, 1, 0, 1, 0, 0))

d = 4  # j = 3/2
u = np.array([[basis_change_coeff(3, two_m, alpha) for alpha in range(d)]
              for two_m in range(-3, 4, 2)])
print("\nbasis-change unitarity at j = 3/2:",
      float(np.max(np.abs(u.conj().T @ u - np.eye(d)))))
