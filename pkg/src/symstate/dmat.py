"""DMAT1: a plain-text, bit-exact complex matrix format.

::

    DMAT1 <rows> <cols>
    (<re>,<im>) (<re>,<im>) ...     # one line per row

Floats use Python's shortest round-trip ``repr``, so ``parse(render(M))``
reproduces every double exactly.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import DmatParseError
from .linalg import as_cmatrix

__all__ = ["render", "parse", "read", "write"]

_ENTRY = re.compile(r"^\(([^,()\s]+),([^,()\s]+)\)$")


def _fmt(x: float) -> str:
    return repr(float(x))


def render(M) -> str:
    M = as_cmatrix(M)
    rows, cols = M.shape
    lines = [f"DMAT1 {rows} {cols}"]
    for row in M:
        lines.append(" ".join(f"({_fmt(z.real)},{_fmt(z.imag)})" for z in row))
    return "\n".join(lines) + "\n"


def parse(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines:
        raise DmatParseError("empty input", lineno=1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "DMAT1":
        raise DmatParseError("expected header 'DMAT1 <rows> <cols>'", lineno=1)
    try:
        rows, cols = int(head[1]), int(head[2])
    except ValueError:
        raise DmatParseError("header dimensions must be integers", lineno=1) from None
    if rows < 1 or cols < 1:
        raise DmatParseError("header dimensions must be positive", lineno=1)
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != rows:
        raise DmatParseError(f"expected {rows} rows, found {len(body)}", lineno=len(body) + 2)
    M = np.empty((rows, cols), dtype=np.complex128)
    for r, line in enumerate(body):
        lineno = r + 2
        tokens = line.split()
        if len(tokens) != cols:
            raise DmatParseError(f"expected {cols} entries, found {len(tokens)}", lineno=lineno)
        for c, tok in enumerate(tokens):
            m = _ENTRY.match(tok)
            if m is None:
                raise DmatParseError(f"malformed entry {tok!r}", lineno=lineno)
            try:
                re_, im_ = float(m.group(1)), float(m.group(2))
            except ValueError:
                raise DmatParseError(f"malformed number in {tok!r}", lineno=lineno) from None
            if not (np.isfinite(re_) and np.isfinite(im_)):
                raise DmatParseError(f"non-finite entry {tok!r}", lineno=lineno)
            M[r, c] = complex(re_, im_)
    return M


def read(path) -> np.ndarray:
    return parse(Path(path).read_text(encoding="ascii"))


def write(path, M) -> None:
    Path(path).write_text(render(M), encoding="ascii")
