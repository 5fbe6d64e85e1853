"""Small exact matrices over the cyclotomic scalar field.

Plain tuples of tuples of field elements, sized as needed (the concrete
realizations use 2x2 up to 8x8).  Everything is exact: inverses go
through Gauss-Jordan with field division, determinants and minors
through cofactor expansion on the small sizes in play.
"""

from __future__ import annotations

from fractions import Fraction

from ..cyclo import CycNum, field

__all__ = [
    "mat",
    "mat_id",
    "mat_diag",
    "mat_mul",
    "mat_vecmul",
    "mat_transpose",
    "mat_scale",
    "mat_neg",
    "mat_eq",
    "mat_det",
    "mat_inv",
    "mat_minor",
    "block_diag",
    "block_offdiag",
]

Mat = tuple


def _coerce(v, F) -> CycNum:
    if isinstance(v, CycNum):
        return v
    return F.from_rational(Fraction(v))


def mat(rows, level: int = 36) -> Mat:
    F = field(level)
    return tuple(tuple(_coerce(v, F) for v in r) for r in rows)


def mat_id(n: int, level: int = 36) -> Mat:
    return mat([[1 if i == j else 0 for j in range(n)] for i in range(n)], level)


def mat_diag(*entries, level: int = 36) -> Mat:
    n = len(entries)
    return mat([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], level)


def mat_mul(A: Mat, B: Mat) -> Mat:
    n, m, p = len(A), len(B), len(B[0])
    return tuple(tuple(_dot(A[i], [B[k][j] for k in range(m)]) for j in range(p))
                 for i in range(n))


def _dot(row, col):
    out = row[0] * col[0]
    for a, b in zip(row[1:], col[1:]):
        out = out + a * b
    return out


def mat_vecmul(A: Mat, v) -> tuple:
    return tuple(_dot(A[i], list(v)) for i in range(len(A)))


def mat_transpose(A: Mat) -> Mat:
    return tuple(tuple(A[j][i] for j in range(len(A))) for i in range(len(A[0])))


def mat_scale(s, A: Mat) -> Mat:
    return tuple(tuple(s * v for v in row) for row in A)


def mat_neg(A: Mat) -> Mat:
    return tuple(tuple(-v for v in row) for row in A)


def mat_eq(A: Mat, B: Mat) -> bool:
    if len(A) != len(B) or len(A[0]) != len(B[0]):
        return False
    return all(A[i][j] == B[i][j] for i in range(len(A)) for j in range(len(A[0])))


def mat_det(A: Mat) -> CycNum:
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    out = None
    for j in range(n):
        if not A[0][j]:
            continue
        sub = tuple(tuple(A[i][k] for k in range(n) if k != j) for i in range(1, n))
        term = A[0][j] * mat_det(sub)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    if out is None:
        F = field(A[0][0].level)
        return F.zero
    return out


def mat_minor(A: Mat, rows, cols) -> CycNum:
    sub = tuple(tuple(A[i][j] for j in cols) for i in rows)
    return mat_det(sub)


def mat_inv(A: Mat) -> Mat:
    n = len(A)
    F = field(A[0][0].level)
    work = [list(row) + [F.one if i == j else F.zero for j in range(n)]
            for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv = work[col][col].inverse()
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [vr - f * vc for vr, vc in zip(work[r], work[col])]
    return tuple(tuple(work[i][n:]) for i in range(n))


def block_diag(A: Mat, B: Mat, level: int = 36) -> Mat:
    F = field(level)
    n, m = len(A), len(B)
    out = []
    for i in range(n):
        out.append(tuple(A[i]) + tuple(F.zero for _ in range(m)))
    for i in range(m):
        out.append(tuple(F.zero for _ in range(n)) + tuple(B[i]))
    return tuple(out)


def block_offdiag(A: Mat, B: Mat, level: int = 36) -> Mat:
    """[[0, A], [B, 0]] with A upper right."""
    F = field(level)
    n, m = len(B), len(A)
    out = []
    for i in range(m):
        out.append(tuple(F.zero for _ in range(len(B[0]))) + tuple(A[i]))
    for i in range(n):
        out.append(tuple(B[i]) + tuple(F.zero for _ in range(len(A[0]))))
    return tuple(out)
