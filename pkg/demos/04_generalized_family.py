"""The d x d generalization: still PPT, still invariant under {1,d}|rest."""

import numpy as np

from symstate import InvarianceLaw, Partition, generalized_horodecki, horodecki, is_invariant, ppt_check

assert np.array_equal(generalized_horodecki(3, 0.4), horodecki(0.4))
print("d=3 reproduces the 3x3 family exactly")

for d in (4, 5, 6):
    p = Partition.from_classes([[1, d]] + [[j] for j in range(2, d)])
    worst = min(ppt_check(generalized_horodecki(d, a), d).min_eig_gamma for a in np.linspace(0, 1, 21))
    invariant = all(is_invariant(generalized_horodecki(d, a), p, InvarianceLaw.UUBAR) for a in np.linspace(0, 1, 21))
    print(f"d={d}: worst min eig of rho^T_B over 21 points = {worst:+.2e}; invariant under {p}: {invariant}")
