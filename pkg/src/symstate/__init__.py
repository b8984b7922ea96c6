"""Bipartite d x d states invariant under diagonal phase subgroups of U(d)."""

from .blocks import BlockDecomposition, blockwise_psd, support_blocks, verify_subspace_relations
from .criteria import PptReport, abelian_ppt, ccnr_value, ppt_check
from .linalg import eig_hermitian, kron, partial_transpose, realign, trace_norm
from .states import (
    AbelianFamilyParams,
    abelian_family,
    conjugate,
    generalized_horodecki,
    horodecki,
    horodecki_dprime,
    horodecki_prime,
    maximally_entangled,
)
from .symmetry import (
    InvarianceLaw,
    Partition,
    allowed_mask,
    detect_symmetry,
    group_element,
    is_invariant,
    twirl,
)

__version__ = "0.1.0"
