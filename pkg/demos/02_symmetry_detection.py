"""Finding which abelian phase subgroup a state is invariant under.

A partition of {1, 2, 3} ties phases together: 13|2 means diag(x, y, x).
Finer partitions give larger groups and therefore more constraints.
"""

from symstate import InvarianceLaw, Partition, detect_symmetry, horodecki, horodecki_prime, horodecki_dprime
from symstate.symmetry import allowed_mask, is_invariant_sampled

for name, ctor in [("rho", horodecki), ("rho'", horodecki_prime), ("rho''", horodecki_dprime)]:
    rho = ctor(0.5)
    found = detect_symmetry(rho)
    print(f"{name:6s} invariant under: {', '.join(map(str, found))}   (finest: {found[0]})")

# The exact test reads the allowed pattern directly; the sampled test draws
# random group elements and conjugates.  They agree.
p = Partition.from_text("13|2")
rho = horodecki(0.5)
print()
print("allowed pattern for 13|2 under UUbar (1 = entry may be nonzero):")
for row in allowed_mask(p, InvarianceLaw.UUBAR).astype(int):
    print("   " + " ".join(map(str, row)))
print("sampled check over 64 random elements:", is_invariant_sampled(rho, p, InvarianceLaw.UUBAR))
