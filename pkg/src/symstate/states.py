"""Constructors for the 3 x 3 Horodecki family, its relabelled forms, the
abelian-invariant family and a d x d generalisation.

All entries are written in closed form (one multiply per entry), so repeated
construction is bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BadNormalization,
    DimensionMismatch,
    DimensionTooSmall,
    NotPSD,
    ParamOutOfRange,
    SymstateError,
)
from .linalg import as_cmatrix, bipartite_dim, flat_index

__all__ = [
    "HorodeckiParams",
    "AbelianFamilyParams",
    "horodecki",
    "horodecki_prime",
    "horodecki_dprime",
    "generalized_horodecki",
    "abelian_family",
    "maximally_entangled",
    "maximally_mixed",
    "check_permutation",
    "permutation_matrix",
    "conjugate",
    "PRIME_PERM",
    "DPRIME_PERM",
    "TRANSPOSITION_23",
    "TRANSPOSITION_12",
]

# Local relabellings (1-based images k -> perm[k-1]).  The printed primed
# matrices are the 3-cycle images; the transpositions give the other member
# of the same symmetry class.
PRIME_PERM = (2, 3, 1)
DPRIME_PERM = (3, 1, 2)
TRANSPOSITION_23 = (1, 3, 2)
TRANSPOSITION_12 = (2, 1, 3)


@dataclass(frozen=True)
class HorodeckiParams:
    d: int
    a: float

    def __post_init__(self):
        if self.d < 3:
            raise DimensionTooSmall(f"generalized Horodecki state needs d >= 3, got d={self.d}")
        if not (0.0 <= self.a <= 1.0):
            raise ParamOutOfRange(f"a must be in [0,1], got {self.a}")

    @property
    def N(self) -> float:
        return 1.0 / ((self.d * self.d - 1) * self.a + 1)

    @property
    def b(self) -> float:
        return (1 + self.a) / 2

    @property
    def c(self) -> float:
        return math.sqrt(1 - self.a * self.a) / 2


def horodecki(a: float) -> np.ndarray:
    """The 3 x 3 bound-entangled Horodecki state at mixing parameter ``a``."""
    hp = HorodeckiParams(3, a)
    Na, Nb, Nc = hp.N * a, hp.N * hp.b, hp.N * hp.c
    rho = np.zeros((9, 9), dtype=np.complex128)
    corner = [0, 4, 8]                              # |11>, |22>, |33>
    for u in corner:
        for v in corner:
            rho[u, v] = Na
    for u in (1, 2, 3, 5, 7):                       # |12>, |13>, |21>, |23>, |32>
        rho[u, u] = Na
    rho[6, 6] = rho[8, 8] = Nb                      # |31>, |33>
    rho[6, 8] = rho[8, 6] = Nc
    return rho


def horodecki_prime(a: float) -> np.ndarray:
    """Horodecki state invariant under the ``x1 = x2`` subgroup (printed form)."""
    return conjugate(horodecki(a), PRIME_PERM)


def horodecki_dprime(a: float) -> np.ndarray:
    """Horodecki state invariant under the ``x2 = x3`` subgroup (printed form)."""
    return conjugate(horodecki(a), DPRIME_PERM)


def generalized_horodecki(d: int, a: float) -> np.ndarray:
    """d x d analogue invariant under the ``x1 = xd`` phase subgroup.

    ``N [a sum_ij |ii><jj| - a|dd><dd| + a sum_{i!=j, (i,j)!=(d,1)} |ij><ij|
    + b(|d1><d1| + |dd><dd|) + c(|d1><dd| + |dd><d1|)]`` with
    ``N = 1 / ((d^2 - 1) a + 1)``; equals :func:`horodecki` at ``d = 3``.
    """
    hp = HorodeckiParams(d, a)
    Na, Nb, Nc = hp.N * a, hp.N * hp.b, hp.N * hp.c
    rho = np.zeros((d * d, d * d), dtype=np.complex128)
    diag = [flat_index(i, i, d) for i in range(1, d + 1)]
    for u in diag:
        for v in diag:
            rho[u, v] = Na
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if i != j and (i, j) != (d, 1):
                u = flat_index(i, j, d)
                rho[u, u] = Na
    d1, dd = flat_index(d, 1, d), flat_index(d, d, d)
    rho[d1, d1] = rho[dd, dd] = Nb
    rho[d1, dd] = rho[dd, d1] = Nc
    return rho


@dataclass(frozen=True)
class AbelianFamilyParams:
    """Coefficients ``a_ij`` (PSD matrix) and ``d_ij`` (i != j, non-negative).

    Validates on construction; ``d_matrix`` diagonal must be zero.
    """

    a_matrix: np.ndarray
    d_matrix: np.ndarray
    tol: float = 1e-12

    def __post_init__(self):
        A = as_cmatrix(self.a_matrix)
        D = np.asarray(self.d_matrix, dtype=float)
        if A.shape[0] != A.shape[1] or D.shape != A.shape:
            raise DimensionMismatch(f"a_matrix {A.shape} and d_matrix {D.shape} must be equal square shapes")
        if np.any(np.diag(D) != 0):
            raise SymstateError("d_matrix must have a zero diagonal")
        if np.any(D < 0):
            raise ParamOutOfRange("d_matrix entries must be non-negative")
        herm = np.max(np.abs(A - A.conj().T))
        if herm > self.tol:
            raise NotPSD(f"a_matrix is not Hermitian (defect {herm:.3g})")
        lo = np.linalg.eigvalsh((A + A.conj().T) / 2)[0]
        if lo < -self.tol:
            raise NotPSD(f"a_matrix has negative eigenvalue {lo:.3g}")
        total = np.trace(A).real + D.sum()
        if abs(total - 1) > self.tol:
            raise BadNormalization(f"sum a_ii + sum d_ij = {total!r}, expected 1")
        object.__setattr__(self, "a_matrix", A)
        object.__setattr__(self, "d_matrix", D)

    @property
    def d(self) -> int:
        return self.a_matrix.shape[0]


def abelian_family(p: AbelianFamilyParams) -> np.ndarray:
    """``sum_ij a_ij |ii><jj| + sum_{i!=j} d_ij |ij><ij|``."""
    d = p.d
    rho = np.zeros((d * d, d * d), dtype=np.complex128)
    diag = np.arange(d) * (d + 1)
    rho[np.ix_(diag, diag)] = p.a_matrix
    for i in range(d):
        for j in range(d):
            if i != j:
                u = i * d + j
                rho[u, u] = p.d_matrix[i, j]
    return rho


def maximally_entangled(d: int) -> np.ndarray:
    """Projector onto ``(1/sqrt d) sum_i |ii>``."""
    return abelian_family(AbelianFamilyParams(np.full((d, d), 1.0 / d), np.zeros((d, d))))


def maximally_mixed(d: int) -> np.ndarray:
    return np.eye(d * d, dtype=np.complex128) / (d * d)


def check_permutation(perm: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    perm = tuple(int(k) for k in perm)
    n = len(perm) if d is None else d
    if sorted(perm) != list(range(1, n + 1)):
        raise SymstateError(f"{perm} is not a permutation of 1..{n}")
    return perm


def permutation_matrix(perm: Sequence[int]) -> np.ndarray:
    """0/1 matrix ``S`` with ``S|k> = |perm[k-1]>``."""
    perm = check_permutation(perm)
    S = np.zeros((len(perm), len(perm)))
    for k, image in enumerate(perm):
        S[image - 1, k] = 1.0
    return S


def conjugate(rho, perm: Sequence[int]) -> np.ndarray:
    """``(S (x) S) rho (S (x) S)^H`` for the permutation matrix ``S`` of ``perm``.

    Done as an index relabelling, so it is exact.
    """
    M = as_cmatrix(rho)
    d = bipartite_dim(M)
    if len(perm) != d:
        raise DimensionMismatch(f"permutation has length {len(perm)} but d={d}")
    perm = check_permutation(perm, d)
    sigma = np.asarray(perm) - 1
    image = (sigma[:, None] * d + sigma[None, :]).ravel()   # |ij> -> |s(i) s(j)>
    out = np.empty_like(M)
    out[np.ix_(image, image)] = M
    return out
