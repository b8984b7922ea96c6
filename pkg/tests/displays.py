"""Hand transcriptions of the printed 9x9 matrices (1-based rows/columns).

Letter grids hold ``.``, ``a``, ``b``, ``c``.  Symbolic grids hold ``kl``
meaning "the entry rho[k, l] of the source matrix" (1-based flat indices).
"""

import numpy as np


def _grid(text):
    rows = [line.split() for line in text.strip().splitlines()]
    assert len(rows) == 9 and all(len(r) == 9 for r in rows), rows
    return rows


HORODECKI = _grid("""
a . . . a . . . a
. a . . . . . . .
. . a . . . . . .
. . . a . . . . .
a . . . a . . . a
. . . . . a . . .
. . . . . . b . c
. . . . . . . a .
a . . . a . c . b
""")

# printed row 2 has only eight cells; the missing one is a trailing dot
HORODECKI_PRIME = _grid("""
b c . . a . . . a
c b . . . . . . .
. . a . . . . . .
. . . a . . . . .
a . . . a . . . a
. . . . . a . . .
. . . . . . a . .
. . . . . . . a .
a . . . a . . . a
""")

HORODECKI_DPRIME = _grid("""
a . . . a . . . a
. a . . . . . . .
. . a . . . . . .
. . . a . . . . .
a . . . b c . . a
. . . . c b . . .
. . . . . . a . .
. . . . . . . a .
a . . . a . . . a
""")

# partial transpose of an x1 = x3 invariant operator
GAMMA_13 = _grid("""
11 .  31 .  .  .  17 .  37
.  22 .  15 .  35 .  28 .
13 .  33 .  .  .  19 .  39
.  51 .  44 .  64 .  57 .
.  .  .  .  55 .  .  .  .
.  53 .  46 .  66 .  59 .
71 .  91 .  .  .  77 .  97
.  82 .  75 .  95 .  88 .
73 .  93 .  .  .  79 .  99
""")

GAMMA_12 = _grid("""
11 21 .  14 24 .  .  .  .
12 22 .  15 25 .  .  .  .
.  .  33 .  .  36 19 29 .
41 51 .  44 54 .  .  .  .
42 52 .  45 55 .  .  .  .
.  .  63 .  .  66 49 59 .
.  .  91 .  .  94 77 87 .
.  .  92 .  .  95 78 88 .
.  .  .  .  .  .  .  .  99
""")

GAMMA_23 = _grid("""
11 .  .  .  .  .  .  .  .
.  22 32 15 .  .  18 .  .
.  23 33 16 .  .  19 .  .
.  51 61 44 .  .  47 .  .
.  .  .  .  55 65 .  58 68
.  .  .  .  56 66 .  59 69
.  81 91 74 .  .  77 .  .
.  .  .  .  85 95 .  88 98
.  .  .  .  86 96 .  89 99
""")

# zero patterns of the invariant classes: nonzero columns per row (1-based)
PATTERN_MAXIMAL = [[1, 5, 9], [2], [3], [4], [1, 5, 9], [6], [7], [8], [1, 5, 9]]
PATTERN_13 = [[1, 3, 5, 7, 9], [2, 8], [1, 3, 5, 7, 9], [4, 6], [1, 3, 5, 7, 9],
              [4, 6], [1, 3, 5, 7, 9], [2, 8], [1, 3, 5, 7, 9]]
PATTERN_12 = [[1, 2, 4, 5, 9], [1, 2, 4, 5, 9], [3, 6], [1, 2, 4, 5, 9], [1, 2, 4, 5, 9],
              [3, 6], [7, 8], [7, 8], [1, 2, 4, 5, 9]]
PATTERN_23 = [[1, 5, 6, 8, 9], [2, 3], [2, 3], [4, 7], [1, 5, 6, 8, 9], [1, 5, 6, 8, 9],
              [4, 7], [1, 5, 6, 8, 9], [1, 5, 6, 8, 9]]


def pattern_mask(rows):
    mask = np.zeros((9, 9), dtype=bool)
    for r, cols in enumerate(rows):
        for c in cols:
            mask[r, c - 1] = True
    return mask


def letter_matrix(grid, a, b, c, N):
    value = {".": 0.0, "a": N * a, "b": N * b, "c": N * c}
    return np.array([[value[s] for s in row] for row in grid])


def symbolic_source(grid, r, c):
    """(k, l) 0-based source position for cell (r, c), or None for a dot."""
    s = grid[r][c]
    if s == ".":
        return None
    return int(s[0]) - 1, int(s[1]) - 1
