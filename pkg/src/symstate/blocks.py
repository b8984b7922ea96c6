"""Direct-sum (block-diagonal) structure of bipartite operators."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import InvalidDecomposition, NotHermitian, ShapeMismatch
from .linalg import as_cmatrix, basis_label, bipartite_dim, eig_hermitian, hermitian_tol, max_abs
from .symmetry import InvarianceLaw, Partition, allowed_mask

__all__ = [
    "BlockDecomposition",
    "support_blocks",
    "symmetry_blocks",
    "block_min_eigs",
    "blockwise_psd",
    "verify_subspace_relations",
]


@dataclass(frozen=True)
class BlockDecomposition:
    """Disjoint flat-index blocks covering ``0..d^2-1``.

    Canonical order: each block ascending, blocks by smallest element.
    """

    d: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(int(u) for u in b)) for b in self.blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", blocks)
        flat = [u for b in blocks for u in b]
        if len(flat) != len(set(flat)):
            raise InvalidDecomposition("blocks overlap")
        if sorted(flat) != list(range(self.d * self.d)):
            raise InvalidDecomposition(f"blocks do not cover 0..{self.d * self.d - 1}")

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @property
    def labels(self) -> list[list[tuple[int, int]]]:
        return [[basis_label(u, self.d) for u in b] for b in self.blocks]

    def dims_text(self) -> str:
        """Block sizes joined with '+', largest first (e.g. ``"5+2+2"``)."""
        return "+".join(str(n) for n in sorted(self.dims, reverse=True))

    def report(self) -> str:
        lines = []
        for k, labels in enumerate(self.labels, start=1):
            kets = " ".join(f"|{i} {j}>" for i, j in labels)
            lines.append(f"block {k} (dim {len(labels)}): {kets}")
        return "\n".join(lines)

    def label_sets(self) -> list[frozenset]:
        return [frozenset(ls) for ls in self.labels]

    def embed(self, parts) -> np.ndarray:
        """Direct sum of per-block matrices placed back at their indices."""
        n = self.d * self.d
        out = np.zeros((n, n), dtype=np.complex128)
        for idx, part in zip(self.blocks, parts):
            out[np.ix_(idx, idx)] = part
        return out

    def restrict(self, rho) -> list[np.ndarray]:
        M = as_cmatrix(rho)
        return [M[np.ix_(idx, idx)] for idx in self.blocks]


def _components(adjacency: np.ndarray, d: int) -> BlockDecomposition:
    _, labels = connected_components(adjacency, directed=False)
    groups: dict[int, list[int]] = {}
    for u, c in enumerate(labels):
        groups.setdefault(int(c), []).append(u)
    return BlockDecomposition(d, tuple(tuple(g) for g in groups.values()))


def support_blocks(rho, d: int, tol: float = 1e-12, partition: Partition | None = None,
                   law: InvarianceLaw | str | None = None) -> BlockDecomposition:
    """Connected components of the support graph of ``rho``.

    The graph has an edge ``u ~ v`` whenever ``|rho[u, v]| > tol``.  Indices
    with nothing attached end up as singletons.

    Passing ``partition`` and ``law`` also joins every pair of indices whose
    entry is permitted by that symmetry, giving the symmetry sectors (merged
    further if ``rho`` is not actually invariant).  That is the decomposition
    shared by every operator of the invariant class, whereas the plain
    support graph can be finer for a particular member.
    """
    M = as_cmatrix(rho)
    bipartite_dim(M, d)
    htol = max(tol, hermitian_tol(M))
    if max_abs(M - M.conj().T) > htol:
        raise NotHermitian("support_blocks expects a Hermitian matrix")
    adjacency = np.abs(M) > tol
    if partition is not None:
        if law is None:
            raise ValueError("law is required together with partition")
        adjacency |= allowed_mask(partition, InvarianceLaw.parse(law))
    np.fill_diagonal(adjacency, False)
    return _components(adjacency, d)


def symmetry_blocks(rho, d: int, partition: Partition, law, tol: float = 1e-12) -> BlockDecomposition:
    """Shorthand for :func:`support_blocks` with a symmetry."""
    return support_blocks(rho, d, tol, partition=partition, law=law)


def _check_decoupled(M, bd, tol):
    owner = np.empty(M.shape[0], dtype=int)
    for n, idx in enumerate(bd.blocks):
        owner[list(idx)] = n
    off = owner[:, None] != owner[None, :]
    if off.any():
        leak = float(np.max(np.abs(M[off])))
        if leak > tol:
            raise InvalidDecomposition(f"entry of size {leak:.3g} couples different blocks")


def block_min_eigs(rho, bd: BlockDecomposition, edge_tol: float = 1e-12) -> list[float]:
    """Smallest eigenvalue of every block; 1x1 blocks are read off directly."""
    M = as_cmatrix(rho)
    if M.shape != (bd.d * bd.d, bd.d * bd.d):
        raise InvalidDecomposition(f"matrix shape {M.shape} does not match d={bd.d}")
    _check_decoupled(M, bd, edge_tol)
    out = []
    for part in bd.restrict(M):
        if part.shape[0] == 1:
            out.append(float(part[0, 0].real))
        else:
            out.append(float(eig_hermitian(part)[0]))
    return out


def blockwise_psd(rho, bd: BlockDecomposition, tol: float = 1e-10, edge_tol: float = 1e-12) -> bool:
    """PSD verdict from the blocks alone (all block minima >= -tol)."""
    return all(lam >= -tol for lam in block_min_eigs(rho, bd, edge_tol))


def verify_subspace_relations(bd_rho: BlockDecomposition, bd_gamma: BlockDecomposition) -> bool:
    """Check ``Ht1 + Ht3 = H1`` and ``H2 + H3 = Ht2`` for 3-block decompositions.

    ``H1`` / ``Ht1`` is the largest block and ``Ht3`` the smallest; when sizes
    tie, every consistent assignment is tried.
    """
    if bd_rho.d != bd_gamma.d:
        raise ShapeMismatch(f"decompositions over d={bd_rho.d} and d={bd_gamma.d}")
    if len(bd_rho.blocks) != 3 or len(bd_gamma.blocks) != 3:
        raise ShapeMismatch(
            f"expected 3 and 3 blocks, got {len(bd_rho.blocks)} and {len(bd_gamma.blocks)}")
    H = sorted((set(b) for b in bd_rho.blocks), key=len, reverse=True)
    H1, rest = H[0], H[1] | H[2]
    sizes = sorted(len(b) for b in bd_gamma.blocks)
    for t1, t2, t3 in permutations([set(b) for b in bd_gamma.blocks]):
        if len(t1) != sizes[-1] or len(t3) != sizes[0]:
            continue
        if (t1 | t3) == H1 and rest == t2:
            return True
    return False
