"""Small exact linear-algebra helpers over the rationals.

Everything here is plain fraction-pivot Gaussian elimination; the matrices in
this package are at most 6x6, so no pivoting strategy beyond "first nonzero"
is needed.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMetric

Matrix = list[list[Fraction]]


def _as_fraction_rows(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def determinant(rows) -> Fraction:
    """Determinant by fraction-free-ish elimination (exact)."""
    m = _as_fraction_rows(rows)
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def invert(rows) -> Matrix:
    """Exact inverse; raises SingularMetric when the matrix is singular."""
    n = len(rows)
    m = _as_fraction_rows(rows)
    aug = [m[r] + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMetric(f"matrix is singular at column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_unique(rows, rhs) -> list[Fraction]:
    """Solve A x = b for square invertible A."""
    inverse = invert(rows)
    return [sum((inverse[r][c] * Fraction(rhs[c]) for c in range(len(rhs))), Fraction(0))
            for r in range(len(rhs))]


def row_reduce(rows, rhs):
    """Reduce a general (possibly rectangular) system to echelon form.

    Returns (pivots, solution, inconsistent_row) where `solution` maps column
    index -> value for columns that are uniquely determined, and
    `inconsistent_row` is the index of a row reducing to 0 = nonzero (or None).
    Columns that remain free are absent from the solution.
    """
    m = [_as_fraction_rows([row])[0] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    nrows = len(m)
    ncols = len(rows[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    inconsistent = None
    for r in range(row, nrows):
        if all(x == 0 for x in m[r][:ncols]) and m[r][ncols] != 0:
            inconsistent = r
            break
    free = set(range(ncols)) - {c for _, c in pivots}
    solution: dict[int, Fraction] = {}
    for r, c in pivots:
        # determined only when the row involves no free column
        if all(m[r][cc] == 0 for cc in free):
            solution[c] = m[r][ncols]
    return pivots, solution, inconsistent
