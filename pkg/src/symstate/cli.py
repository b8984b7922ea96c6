"""Command-line front end.

Exit codes: 0 success, 1 validation failure or NPT, 2 usage error,
3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import dmat
from .blocks import support_blocks
from .criteria import ccnr_value, ppt_check, validate_state
from .errors import DimensionMismatch, DmatParseError, NotAState, SymstateError
from .linalg import bipartite_dim, eig_hermitian, partial_transpose
from .states import (
    AbelianFamilyParams,
    abelian_family,
    conjugate,
    generalized_horodecki,
    horodecki,
    horodecki_dprime,
    horodecki_prime,
)
from .symmetry import (
    MAX_DETECT_DIM,
    InvarianceLaw,
    Partition,
    finest_symmetry,
    is_invariant,
    is_invariant_sampled,
    twirl,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SWEEP_HEADER = "a,min_eig,min_eig_gamma,ccnr,finest_partition,block_dims,block_dims_gamma"
A_FAMILIES = {
    "horodecki": lambda d, a: horodecki(a),
    "horodecki_prime": lambda d, a: horodecki_prime(a),
    "horodecki_dprime": lambda d, a: horodecki_dprime(a),
    "generalized": generalized_horodecki,
}


class UsageError(Exception):
    pass


def _seed() -> int:
    raw = os.environ.get("SYMSTATE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SYMSTATE_SEED must be an integer, got {raw!r}") from None


def _g(x: float) -> str:
    return format(float(x), ".12g")


def _csv_float(x: float) -> str:
    return format(float(x), ".17g")


def _read(path):
    try:
        return dmat.read(path)
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path, M):
    try:
        dmat.write(path, M)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from None


class _IOFailure(Exception):
    pass


def _spectrum_line(M) -> str:
    # rounded so that relabelled copies print identically
    w = np.round(eig_hermitian(M)[[0, -1]], 12) + 0.0
    return f"min_eig={_g(w[0])} max_eig={_g(w[1])}"


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family == "abelian":
        if not (args.a_matrix and args.d_matrix):
            raise UsageError("abelian family needs --a-matrix and --d-matrix")
        A = _read(args.a_matrix)
        D = _read(args.d_matrix)
        if np.any(np.abs(D.imag) > 0):
            raise SymstateError("d_matrix must be real")
        rho = abelian_family(AbelianFamilyParams(A, D.real))
    else:
        if args.a is None:
            raise UsageError(f"family {args.family} needs --a")
        rho = A_FAMILIES[args.family](args.d, args.a)
    summary = f"trace={_g(np.trace(rho).real)} min_eig={_g(eig_hermitian(rho)[0])}"
    if args.out:
        _write(args.out, rho)
        print(summary)
    else:
        sys.stdout.write(dmat.render(rho))
        print(summary, file=sys.stderr)
    return EXIT_OK


# -- check -------------------------------------------------------------------

def cmd_check(args) -> int:
    rho = _read(args.input)
    law = InvarianceLaw.parse(args.law)
    d = bipartite_dim(rho)
    print(f"dimension: {d}x{d} (matrix {d * d}x{d * d})")
    try:
        report = ppt_check(rho, d, method=args.method)
    except NotAState as exc:
        print(f"state: invalid ({exc})")
        return EXIT_INVALID

    if report.is_ppt:
        print(f"PPT: yes (min_eig_gamma={_g(report.min_eig_gamma)})")
    else:
        print(f"PPT: no (min_eig_gamma={_g(report.min_eig_gamma)})")
    print(f"min_eig_rho={_g(report.min_eig_rho)}")
    print(f"method={report.method}")

    partition = None
    if args.partition:
        try:
            partition = Partition.from_text(args.partition, d)
        except SymstateError as exc:
            raise UsageError(str(exc)) from None
        exact = is_invariant(rho, partition, law)
        seed = _seed()
        sampled = is_invariant_sampled(rho, partition, law, seed=seed)
        print(f"partition {partition} ({law}) invariant: {'yes' if exact else 'no'}")
        print(f"monte carlo check (64 samples, seed {seed}): {'yes' if sampled else 'no'}")
    elif d <= MAX_DETECT_DIM:
        partition = finest_symmetry(rho, law)
        print(f"finest {law} partition: {partition}")
    else:
        print(f"symmetry detection skipped for d={d} > {MAX_DETECT_DIM}; pass --partition")

    gamma = partial_transpose(rho, d)
    if partition is not None:
        bd = support_blocks(rho, d, partition=partition, law=law)
        bd_g = support_blocks(gamma, d, partition=partition, law=law.dual())
    else:
        bd = support_blocks(rho, d)
        bd_g = support_blocks(gamma, d)
    print(f"blocks: {bd.dims_text()}")
    print(bd.report())
    print(f"gamma blocks: {bd_g.dims_text()}")
    print(bd_g.report())

    value = ccnr_value(rho, d)
    verdict = "CCNR > 1: entangled" if value > 1 + 1e-10 else "no CCNR violation (inconclusive)"
    print(f"ccnr={_g(value)} ({verdict})")
    return EXIT_OK if report.is_ppt else EXIT_INVALID


# -- sweep -------------------------------------------------------------------

def sweep_row(family: str, d: int, a: float) -> str:
    rho = A_FAMILIES[family](d, a)
    M, d = validate_state(rho)
    gamma = partial_transpose(M, d)
    lo = eig_hermitian(M)[0]
    lo_g = eig_hermitian(gamma)[0]
    value = ccnr_value(M, d)
    if d <= MAX_DETECT_DIM:
        p = finest_symmetry(M, InvarianceLaw.UUBAR)
        bd = support_blocks(M, d, partition=p, law=InvarianceLaw.UUBAR)
        bd_g = support_blocks(gamma, d, partition=p, law=InvarianceLaw.UU)
        ptext = str(p)
    else:
        bd, bd_g, ptext = support_blocks(M, d), support_blocks(gamma, d), ""
    return ",".join([_csv_float(a), _csv_float(lo), _csv_float(lo_g), _csv_float(value),
                     ptext, bd.dims_text(), bd_g.dims_text()])


def sweep_csv(family: str, d: int, grid: int, workers: int = 1) -> str:
    """CSV text for ``grid`` equally spaced points on [0, 1]; order is fixed."""
    points = [k / (grid - 1) for k in range(grid)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda a: sweep_row(family, d, a), points))
    else:
        rows = [sweep_row(family, d, a) for a in points]
    return "\n".join([SWEEP_HEADER, *rows]) + "\n"


def cmd_sweep(args) -> int:
    if args.family not in A_FAMILIES:
        raise UsageError(f"sweep supports {', '.join(A_FAMILIES)}; got {args.family}")
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    workers = args.parallel if args.parallel else 1
    text = sweep_csv(args.family, args.d, args.grid, workers)
    if args.out:
        try:
            with open(args.out, "w", encoding="ascii", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise _IOFailure(f"cannot write {args.out}: {exc.strerror or exc}") from None
        print(f"wrote {args.grid} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- conjugate / twirl -------------------------------------------------------

def _parse_perm(text: str) -> tuple[int, ...]:
    try:
        perm = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"malformed permutation {text!r}; expected e.g. '1,3,2'") from None
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise UsageError(f"{text!r} is not a permutation of 1..{len(perm)}")
    return perm


def cmd_conjugate(args) -> int:
    perm = _parse_perm(args.perm)
    rho = _read(args.input)
    d = bipartite_dim(rho)
    if len(perm) != d:
        raise UsageError(f"permutation has {len(perm)} entries but d={d}")
    out = conjugate(rho, perm)
    _write(args.out, out)
    print(f"before: {_spectrum_line(rho)}")
    print(f"after:  {_spectrum_line(out)}")
    return EXIT_OK


def cmd_twirl(args) -> int:
    rho = _read(args.input)
    d = bipartite_dim(rho)
    try:
        partition = Partition.from_text(args.partition, d)
    except SymstateError as exc:
        raise UsageError(str(exc)) from None
    out = twirl(rho, partition, InvarianceLaw.parse(args.law))
    _write(args.out, out)
    print(f"twirled over {partition} ({InvarianceLaw.parse(args.law)}): trace={_g(np.trace(out).real)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symstate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a state to a DMAT1 file")
    g.add_argument("family", choices=[*A_FAMILIES, "abelian"])
    g.add_argument("--a", type=float)
    g.add_argument("--d", type=int, default=3)
    g.add_argument("--a-matrix", help="DMAT1 file with the a_ij coefficients (abelian)")
    g.add_argument("--d-matrix", help="DMAT1 file with the d_ij coefficients (abelian)")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="PPT, symmetry and block report for a DMAT1 file")
    c.add_argument("input")
    c.add_argument("--method", choices=["dense", "blocked"], default="dense")
    c.add_argument("--law", choices=["uubar", "uu"], default="uubar")
    c.add_argument("--partition")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", help="CSV sweep over a in [0,1]")
    s.add_argument("family", choices=list(A_FAMILIES))
    s.add_argument("--d", type=int, default=3)
    s.add_argument("--grid", type=int, default=101)
    s.add_argument("--out")
    s.add_argument("--parallel", type=int, nargs="?", const=os.cpu_count() or 2, default=0,
                   metavar="WORKERS")
    s.set_defaults(func=cmd_sweep)

    k = sub.add_parser("conjugate", help="relabel both factors by a permutation")
    k.add_argument("input")
    k.add_argument("--perm", required=True)
    k.add_argument("-o", "--out", required=True)
    k.set_defaults(func=cmd_conjugate)

    t = sub.add_parser("twirl", help="project onto the operators invariant under a phase subgroup")
    t.add_argument("input")
    t.add_argument("--partition", required=True)
    t.add_argument("--law", choices=["uubar", "uu"], default="uubar")
    t.add_argument("-o", "--out", required=True)
    t.set_defaults(func=cmd_twirl)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DmatParseError, _IOFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SymstateError, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run():
    sys.exit(main())
