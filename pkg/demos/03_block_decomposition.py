"""Direct-sum blocks: why checking PPT only needs small eigensolves.

Invariance under the 13|2 subgroup forces rho into sectors, and the partial
transpose into different sectors (the law flips from U x Ubar to U x U).
"""

from symstate import InvarianceLaw, Partition, horodecki, partial_transpose, ppt_check, support_blocks

rho = horodecki(0.5)
p = Partition.from_text("13|2")
blocks = support_blocks(rho, 3, partition=p, law=InvarianceLaw.UUBAR)
gamma_blocks = support_blocks(partial_transpose(rho, 3), 3, partition=p, law=InvarianceLaw.UU)

print("rho blocks:", blocks.dims_text())
print(blocks.report())
print()
print("partial transpose blocks:", gamma_blocks.dims_text())
print(gamma_blocks.report())

# Without a symmetry hint the numeric support graph splits further.
print()
print("numeric support of rho:", support_blocks(rho, 3).dims_text())

dense = ppt_check(rho, 3, "dense")
blocked = ppt_check(rho, 3, "blocked", partition=p)
print()
print(f"dense   min eig of rho^T_B: {dense.min_eig_gamma:+.3e}, eigensolves {dense.eigensolve_dims}")
print(f"blocked min eig of rho^T_B: {blocked.min_eig_gamma:+.3e}, eigensolves {blocked.eigensolve_dims}")
