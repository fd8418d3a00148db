"""Small exact linear algebra over the rationals.

Matrices are lists of row lists with Fraction entries.  Nothing here is
clever; the symplectic machinery needs solve / nullspace / determinant on
matrices of size at most a few dozen, computed exactly.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "frac_matrix",
    "identity",
    "zeros",
    "transpose",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_vec",
    "hstack",
    "vstack",
    "det",
    "rank",
    "solve",
    "inverse",
    "nullspace",
    "is_symmetric",
    "is_skew",
]

Matrix = list[list[Fraction]]


def frac_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, s) -> Matrix:
    s = Fraction(s)
    return [[x * s for x in row] for row in a]


def mat_vec(a: Matrix, v: list[Fraction]) -> list[Fraction]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def hstack(a: Matrix, b: Matrix) -> Matrix:
    return [ra + rb for ra, rb in zip(a, b)]


def vstack(a: Matrix, b: Matrix) -> Matrix:
    return [list(r) for r in a] + [list(r) for r in b]


def _echelon(m: Matrix) -> tuple[Matrix, list[int]]:
    """Row-reduce in place (on a copy); returns (rref, pivot columns)."""
    m = [list(row) for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m: Matrix) -> int:
    return len(_echelon(m)[1])


def det(m: Matrix) -> Fraction:
    m = [list(row) for row in m]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a X = b for square invertible a (b may have many columns)."""
    n = len(a)
    aug, pivots = _echelon(hstack(a, b))
    if len(pivots) < n or pivots[-1] >= n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in aug[:n]]


def inverse(a: Matrix) -> Matrix:
    return solve(a, identity(len(a)))


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rref, pivots = _echelon(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def is_symmetric(m: Matrix) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))


def is_skew(m: Matrix) -> bool:
    return all(m[i][j] == -m[j][i] for i in range(len(m)) for j in range(len(m)))
