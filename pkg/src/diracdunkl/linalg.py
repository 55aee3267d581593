"""Exact dense linear algebra over an arbitrary exact field.

Rows are lists; entries must support +, -, *, / and truthiness (zero test).
Used with both Fraction and GRational entries.  Pivoting picks the first
nonzero entry, which is always valid over an exact field and keeps the
elimination deterministic.
"""

from __future__ import annotations


def _eliminate(rows: list[list]) -> tuple[list[list], list[int]]:
    """Forward elimination to reduced row echelon form; returns pivots."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: list[list]) -> int:
    _, pivots = _eliminate(rows)
    return len(pivots)


def solve(matrix: list[list], rhs_columns: list[list]) -> list[list]:
    """Solve matrix @ X = rhs for each right-hand-side column.

    The system may be overdetermined but must be consistent with a unique
    solution (full column rank).  Returns the solution columns.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for col in rhs_columns:
        if len(col) != nrows:
            raise ValueError("right-hand side has wrong length")
    augmented = [
        list(matrix[i]) + [col[i] for col in rhs_columns] for i in range(nrows)
    ]
    reduced, pivots = _eliminate(augmented)
    main_pivots = [p for p in pivots if p < ncols]
    if len(main_pivots) < ncols:
        raise ValueError("singular system: matrix does not have full column rank")
    if any(p >= ncols for p in pivots):
        raise ValueError("inconsistent system")
    solutions = []
    for j in range(len(rhs_columns)):
        col = [None] * ncols
        for row_index, p in enumerate(main_pivots):
            col[p] = reduced[row_index][ncols + j]
        solutions.append(col)
    return solutions


# Small exact matrix helpers (square matrices as lists of rows).

def mat_mul(a: list[list], b: list[list]) -> list[list]:
    n, m = len(a), len(b[0])
    inner = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for k in range(1, inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_add(a: list[list], b: list[list]) -> list[list]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: list[list], b: list[list]) -> list[list]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: list[list], value) -> list[list]:
    return [[x * value for x in row] for row in a]


def mat_anticommutator(a: list[list], b: list[list]) -> list[list]:
    return mat_add(mat_mul(a, b), mat_mul(b, a))


def mat_equal(a: list[list], b: list[list]) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))
