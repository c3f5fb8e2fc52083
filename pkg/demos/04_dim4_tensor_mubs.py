"""The five mutually unbiased bases of dimension 4 from two-qubit tensor
products, and the entanglement split between the plain and re-mixed ones.
"""

import numpy as np

from mubkit import entanglement_det, max_pairwise_deviation, mub_dim4

ms = mub_dim4()
print("labels:", ", ".join(b.label for b in ms.bases))
print("worst pairwise deviation over all 10 pairs:", max_pairwise_deviation(ms))

for basis in ms.bases[1:]:
    dets = [entanglement_det(basis.column(i), 2) for i in range(4)]
    kind = "product states" if max(dets) < 1e-12 else "maximally entangled"
    print(f"\n{basis.label}: |det A| per vector = {dets}  ({kind})")
    with np.printoptions(precision=3, suppress=True):
        print(basis.vectors)
