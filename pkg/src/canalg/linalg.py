"""Small exact linear algebra kit over `fractions.Fraction`.

Matrices are tuples of row tuples.  Zero-dimensional shapes (no rows, or rows
of length zero) are legal and arise constantly from vertices carrying the zero
space; callers that compose chains through zero spaces must short-circuit to
an explicit zero matrix since an empty matrix carries no column count.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = tuple[tuple[Fraction, ...], ...]


def mat(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(nrows: int, ncols: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(ncols)) for _ in range(nrows))


def eye(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return ()
    nca = len(a[0])
    if nca != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{nca} @ {len(b)}x?")
    ncb = len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(nca)), Fraction(0))
              for j in range(ncb))
        for i in range(len(a)))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def block_diag(a: Matrix, b: Matrix, acols: int, bcols: int) -> Matrix:
    """Block-diagonal sum; column counts are explicit so blocks with zero rows
    still pad correctly."""
    out = []
    for row in a:
        out.append(tuple(row) + tuple(Fraction(0) for _ in range(bcols)))
    for row in b:
        out.append(tuple(Fraction(0) for _ in range(acols)) + tuple(row))
    return tuple(out)


def rank(a) -> int:
    """Rank by exact Gaussian elimination."""
    rows = [list(row) for row in a if any(x != 0 for x in row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f == 0:
                continue
            ratio = f / pv
            row_i, row_r = rows[i], rows[r]
            for j in range(col, ncols):
                row_i[j] -= ratio * row_r[j]
        r += 1
        if r == len(rows):
            break
    return r


def nullity(a, ncols: int) -> int:
    """Dimension of the solution space of a @ x = 0 in `ncols` unknowns."""
    return ncols - rank(a)
