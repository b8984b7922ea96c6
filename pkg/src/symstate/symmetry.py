"""Diagonal phase subgroups of U(d) and invariance of bipartite operators.

A subgroup of the maximal abelian group ``U_x = exp(i sum_k x_k |k><k|)`` is
fixed by which phases are forced equal, i.e. by a set partition of
``{1..d}``.  Invariance under ``U (x) conj(U)`` (law ``UUBAR``) or ``U (x) U``
(law ``UU``) for every group element reduces to a zero pattern: the entry at
``((i,j),(k,l))`` survives conjugation iff the integer class-indicator vectors

    UUBAR:  e_c(i) - e_c(j) == e_c(k) - e_c(l)
    UU:     e_c(i) + e_c(j) == e_c(k) + e_c(l)

agree, since the picked-up phase is a linear form in the free parameters.
Each law therefore splits the product basis into *sectors* of equal key and
the invariant operators are exactly the block-diagonal ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import ArityMismatch, DimensionTooLarge, SymstateError
from .linalg import as_cmatrix, bipartite_dim, max_abs

__all__ = [
    "InvarianceLaw",
    "Partition",
    "set_partitions",
    "group_element",
    "sector_keys",
    "sectors",
    "allowed_mask",
    "is_invariant",
    "is_invariant_sampled",
    "group_average",
    "twirl",
    "detect_symmetry",
    "finest_symmetry",
    "MAX_DETECT_DIM",
]

MAX_DETECT_DIM = 6


class InvarianceLaw(enum.Enum):
    UUBAR = "uubar"
    UU = "uu"

    @classmethod
    def parse(cls, text) -> "InvarianceLaw":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise SymstateError(f"unknown invariance law {text!r} (use 'uubar' or 'uu')") from None

    def dual(self) -> "InvarianceLaw":
        """Law obeyed by the partial transpose of an operator obeying ``self``."""
        return InvarianceLaw.UU if self is InvarianceLaw.UUBAR else InvarianceLaw.UUBAR

    def __str__(self):
        return "UUbar" if self is InvarianceLaw.UUBAR else "UU"


@dataclass(frozen=True, order=True)
class Partition:
    """Set partition of ``{1..d}`` stored as a restricted growth string.

    ``labels[k]`` is the 0-based class of index ``k + 1``; canonical form
    means ``labels[0] == 0`` and every new class takes the next label.
    The dataclass ordering is therefore lexicographic on the string.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(c) for c in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise SymstateError("partition must cover at least one index")
        top = -1
        for c in labels:
            if c < 0 or c > top + 1:
                raise SymstateError(f"labels {labels} are not a restricted growth string")
            top = max(top, c)

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]], d: int | None = None) -> "Partition":
        """Build from 1-based index groups in any order, e.g. ``[[1, 3], [2]]``."""
        members = [int(k) for group in classes for k in group]
        if d is None:
            d = max(members, default=0)
        if sorted(members) != list(range(1, d + 1)):
            raise SymstateError(f"classes {classes} do not partition 1..{d}")
        owner = {}
        for n, group in enumerate(classes):
            for k in group:
                owner[int(k)] = n
        relabel: dict[int, int] = {}
        labels = []
        for k in range(1, d + 1):
            labels.append(relabel.setdefault(owner[k], len(relabel)))
        return cls(tuple(labels))

    @classmethod
    def from_text(cls, text: str, d: int | None = None) -> "Partition":
        """Parse bar syntax: ``"13|2"``.

        For d >= 10 (or whenever a comma appears) each group is a
        comma-separated list, e.g. ``"1,12|2|...|11"``.
        """
        text = text.strip()
        if not text:
            raise SymstateError("empty partition text")
        comma_mode = "," in text or (d is not None and d > 9)
        classes = []
        for group in text.split("|"):
            group = group.strip()
            if not group:
                raise SymstateError(f"empty class in partition {text!r}")
            parts = group.split(",") if comma_mode else list(group)
            try:
                classes.append([int(p) for p in parts])
            except ValueError:
                raise SymstateError(f"bad index in partition {text!r}") from None
        return cls.from_classes(classes, d)

    @classmethod
    def discrete(cls, d: int) -> "Partition":
        """All phases free: the maximal abelian subgroup."""
        return cls(tuple(range(d)))

    @classmethod
    def trivial(cls, d: int) -> "Partition":
        """All phases equal: global phases only."""
        return cls((0,) * d)

    @property
    def d(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return max(self.labels) + 1

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = [[] for _ in range(self.m)]
        for k, c in enumerate(self.labels, start=1):
            groups[c].append(k)
        return tuple(tuple(g) for g in groups)

    def refines(self, other: "Partition") -> bool:
        """True if every class of ``self`` lies inside a class of ``other``."""
        if self.d != other.d:
            return False
        image: dict[int, int] = {}
        for mine, theirs in zip(self.labels, other.labels):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def permuted(self, perm: Sequence[int]) -> "Partition":
        """Image under ``k -> perm[k-1]`` (1-based permutation)."""
        return Partition.from_classes([[perm[k - 1] for k in group] for group in self.classes], self.d)

    def __str__(self):
        sep = "," if self.d > 9 else ""
        return "|".join(sep.join(str(k) for k in group) for group in self.classes)


def set_partitions(d: int) -> Iterator[Partition]:
    """All set partitions of ``{1..d}`` in lexicographic restricted-growth order."""
    if d < 1:
        return
    labels = [0] * d

    def extend(pos, top):
        if pos == d:
            yield Partition(tuple(labels))
            return
        for c in range(top + 2):
            labels[pos] = c
            yield from extend(pos + 1, max(top, c))

    labels[0] = 0
    yield from extend(1, 0)


def group_element(p: Partition, y: Sequence[float]) -> np.ndarray:
    """Diagonal unitary with entries ``exp(i * y[c(k)])``."""
    y = np.asarray(y, dtype=float).ravel()
    if y.size != p.m:
        raise ArityMismatch(f"partition {p} has {p.m} classes but {y.size} phases were given")
    return np.diag(np.exp(1j * y[list(p.labels)]))


def sector_keys(p: Partition, law: InvarianceLaw) -> list[tuple[int, ...]]:
    """Integer charge vector of every product-basis index under ``law``."""
    law = InvarianceLaw.parse(law)
    sign = -1 if law is InvarianceLaw.UUBAR else 1
    eye = np.eye(p.m, dtype=int)
    keys = []
    for i in range(p.d):
        for j in range(p.d):
            keys.append(tuple(eye[p.labels[i]] + sign * eye[p.labels[j]]))
    return keys


def sectors(p: Partition, law: InvarianceLaw) -> list[list[int]]:
    """Flat indices grouped by charge, each group ascending, ordered by first index."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for u, key in enumerate(sector_keys(p, law)):
        groups.setdefault(key, []).append(u)
    return list(groups.values())


def allowed_mask(p: Partition, law: InvarianceLaw) -> np.ndarray:
    """Boolean d^2 x d^2 mask of entries permitted in an invariant operator."""
    keys = sector_keys(p, law)
    index = {k: n for n, k in enumerate(dict.fromkeys(keys))}
    ids = np.array([index[k] for k in keys])
    return ids[:, None] == ids[None, :]


def _check_dims(rho, p):
    M = as_cmatrix(rho)
    bipartite_dim(M, p.d)
    return M


def is_invariant(rho, p: Partition, law: InvarianceLaw, tol: float = 1e-12) -> bool:
    """Exact invariance test: no forbidden entry exceeds ``tol * ||rho||_max``."""
    M = _check_dims(rho, p)
    forbidden = ~allowed_mask(p, law)
    if not forbidden.any():
        return True
    return bool(np.max(np.abs(M[forbidden])) <= tol * max_abs(M))


def _local_pair(U, law):
    V = U.conj() if InvarianceLaw.parse(law) is InvarianceLaw.UUBAR else U
    return np.kron(U, V)


def random_phases(p: Partition, n_samples: int, seed=0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, 2 * np.pi, size=(n_samples, p.m))


def is_invariant_sampled(rho, p: Partition, law: InvarianceLaw, n_samples: int = 64,
                         tol: float = 1e-12, seed=0) -> bool:
    """Monte Carlo cross-check of :func:`is_invariant` by explicit conjugation.

    Can refute invariance but never certify it.
    """
    M = _check_dims(rho, p)
    scale = tol * max(1.0, max_abs(M))
    for y in random_phases(p, n_samples, seed):
        W = _local_pair(group_element(p, y), law)
        if max_abs(W @ M @ W.conj().T - M) > scale:
            return False
    return True


def group_average(rho, p: Partition, law: InvarianceLaw, n_samples: int = 10_000, seed=0) -> np.ndarray:
    """Empirical mean of ``W rho W^H`` over uniformly random group elements."""
    M = _check_dims(rho, p)
    keys = np.array(sector_keys(p, law))            # (d^2, m)
    acc = np.zeros_like(M)
    for y in random_phases(p, n_samples, seed):
        phase = np.exp(1j * (keys @ y))              # diagonal of W
        acc += phase[:, None] * M * phase.conj()[None, :]
    return acc / n_samples


def twirl(rho, p: Partition, law: InvarianceLaw) -> np.ndarray:
    """Projection onto the invariant operators (Haar average over the subgroup).

    For a torus the average kills every entry whose phase character is
    non-trivial, so this is just the mask.
    """
    M = _check_dims(rho, p)
    return np.where(allowed_mask(p, law), M, 0)


def detect_symmetry(rho, law: InvarianceLaw = InvarianceLaw.UUBAR, tol: float = 1e-12) -> list[Partition]:
    """Every phase subgroup leaving ``rho`` invariant, finest first.

    Brute force over all set partitions (Bell(6) = 203 at the cap). Ties in
    class count keep restricted-growth order.
    """
    d = bipartite_dim(rho)
    if d > MAX_DETECT_DIM:
        raise DimensionTooLarge(f"symmetry detection is capped at d={MAX_DETECT_DIM}, got d={d}")
    M = as_cmatrix(rho)
    found = [p for p in set_partitions(d) if is_invariant(M, p, law, tol)]
    return sorted(found, key=lambda p: -p.m)


def finest_symmetry(rho, law: InvarianceLaw = InvarianceLaw.UUBAR, tol: float = 1e-12) -> Partition:
    """First entry of :func:`detect_symmetry`.

    Not unique in general: for d >= 4 two incomparable partitions with the
    same class count can both leave ``rho`` invariant.
    """
    return detect_symmetry(rho, law, tol)[0]
