"""PPT verdicts and the realignment (CCNR) value."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blocks import block_min_eigs, support_blocks
from .errors import NotAState, NotHermitian, SymstateError
from .linalg import as_cmatrix, bipartite_dim, eig_hermitian, hermitian_tol, partial_transpose, realign, trace_norm
from .states import AbelianFamilyParams
from .symmetry import InvarianceLaw, Partition

__all__ = ["PptReport", "validate_state", "ppt_check", "abelian_ppt", "ccnr_value", "PPT_TOL"]

PPT_TOL = 1e-10


@dataclass(frozen=True)
class PptReport:
    is_ppt: bool
    min_eig_rho: float
    min_eig_gamma: float
    method: str
    block_dims: tuple[int, ...] | None = None
    block_dims_gamma: tuple[int, ...] | None = None
    eigensolve_dims: tuple[int, ...] = field(default=(), compare=False)


def validate_state(rho, d: int | None = None, tol: float = PPT_TOL) -> tuple[np.ndarray, int]:
    """Hermitian, unit trace and PSD within ``tol``; returns ``(matrix, d)``."""
    M = as_cmatrix(rho)
    d = bipartite_dim(M, d)
    try:
        lo = eig_hermitian(M, tol=hermitian_tol(M))[0]
    except NotHermitian as exc:
        raise NotAState(f"not a state: {exc}", reason="hermitian") from None
    tr = np.trace(M)
    if abs(tr - 1) > tol:
        raise NotAState(f"not a state: trace is {tr.real:.12g}, expected 1", reason="trace")
    if lo < -tol:
        raise NotAState(f"not a state: min eigenvalue {lo:.3g} is negative", reason="psd")
    return M, d


def ppt_check(rho, d: int | None = None, method: str = "dense", tol: float = PPT_TOL,
              partition: Partition | None = None, law=InvarianceLaw.UUBAR) -> PptReport:
    """Positivity of ``rho`` and of its partial transpose.

    ``method="blocked"`` splits both operators along their support graphs
    (or symmetry sectors when ``partition`` is given; ``law`` then applies
    to ``rho`` and its dual to the partial transpose) and eigensolves only
    the blocks.
    """
    M, d = validate_state(rho, d, tol)
    G = partial_transpose(M, d)
    if method == "dense":
        lo_rho = float(eig_hermitian(M)[0])
        lo_gamma = float(eig_hermitian(G)[0])
        return PptReport(lo_gamma >= -tol, lo_rho, lo_gamma, "dense", eigensolve_dims=(d * d, d * d))
    if method != "blocked":
        raise SymstateError(f"unknown method {method!r} (use 'dense' or 'blocked')")
    law = InvarianceLaw.parse(law)
    bd = support_blocks(M, d, partition=partition, law=law if partition else None)
    bd_g = support_blocks(G, d, partition=partition, law=law.dual() if partition else None)
    lo_rho = min(block_min_eigs(M, bd))
    lo_gamma = min(block_min_eigs(G, bd_g))
    solves = tuple(n for n in bd.dims + bd_g.dims if n > 1)
    return PptReport(lo_gamma >= -tol, lo_rho, lo_gamma, "blocked",
                     tuple(bd.dims), tuple(bd_g.dims), solves)


def abelian_ppt(p: AbelianFamilyParams, tol: float = 1e-12) -> bool:
    """Closed-form PPT test for the abelian family: ``d_ij d_ji >= |a_ij|^2``."""
    A, D = p.a_matrix, p.d_matrix
    for i in range(p.d):
        for j in range(i + 1, p.d):
            if D[i, j] * D[j, i] < abs(A[i, j]) ** 2 - tol:
                return False
    return True


def ccnr_value(rho, d: int | None = None) -> float:
    """Trace norm of the realigned state; above 1 certifies entanglement."""
    M, d = validate_state(rho, d)
    return trace_norm(realign(M, d))
