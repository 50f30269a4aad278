"""Exact integer linear algebra on row-major tuples of Python ints."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]
Rows = Sequence[Sequence[int]]


def to_lists(rows: Rows) -> Matrix:
    return [list(row) for row in rows]


def to_tuples(rows: Rows) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(rows: Rows) -> Matrix:
    return [list(col) for col in zip(*rows)]


def matmul(a: Rows, b: Rows) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v: Sequence[int], m: Rows) -> List[int]:
    """Row vector times matrix."""
    width = len(m[0]) if m else 0
    out = [0] * width
    for coeff, row in zip(v, m):
        if coeff:
            for j, entry in enumerate(row):
                out[j] += coeff * entry
    return out


def quadratic_form(gram: Rows, v: Sequence[int]) -> int:
    return sum(vi * x for vi, x in zip(v, vecmat(v, gram)))


def bilinear_form(gram: Rows, u: Sequence[int], v: Sequence[int]) -> int:
    return sum(ui * x for ui, x in zip(u, vecmat(v, gram)))


def gram_of_rows(rows: Rows) -> Matrix:
    """Pairwise dot products of integer rows."""
    return [[sum(x * y for x, y in zip(r, s)) for s in rows] for r in rows]


def leading_minors(m: Rows) -> List[int]:
    """Leading principal minors via fraction-free Bareiss elimination.

    Stops after the first minor that is not positive, since the elimination
    cannot continue past a zero pivot without pivoting.
    """
    a = to_lists(m)
    n = len(a)
    minors: List[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot <= 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(m: Rows) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    a = to_lists(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_with_transform(rows: Rows) -> Tuple[Matrix, Matrix]:
    """Row-style Hermite normal form H together with unimodular U, U·A = H.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot). Zero rows are moved to the bottom.
    """
    a = to_lists(rows)
    m = len(a)
    ncols = len(a[0]) if m else 0
    u = identity(m)
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= m:
            break
        for i in range(pivot_row + 1, m):
            if a[i][col] == 0:
                continue
            x, y = a[pivot_row][col], a[i][col]
            g, s, t = extended_gcd(x, y)
            p, q = x // g, y // g
            top = [s * xr + t * yr for xr, yr in zip(a[pivot_row], a[i])]
            bottom = [-q * xr + p * yr for xr, yr in zip(a[pivot_row], a[i])]
            a[pivot_row], a[i] = top, bottom
            utop = [s * xr + t * yr for xr, yr in zip(u[pivot_row], u[i])]
            ubottom = [-q * xr + p * yr for xr, yr in zip(u[pivot_row], u[i])]
            u[pivot_row], u[i] = utop, ubottom
        pivot = a[pivot_row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
            pivot = -pivot
        for i in range(pivot_row):
            q = a[i][col] // pivot
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return a, u


def hermite_basis(rows: Rows) -> Matrix:
    """Nonzero rows of the Hermite normal form: a basis of the row lattice."""
    if not rows:
        return []
    h, _ = hermite_with_transform(rows)
    return [row for row in h if any(row)]


def integer_kernel(a: Rows) -> Matrix:
    """Basis of {x in Z^n : x·A = 0} for an n×k integer matrix A."""
    n = len(a)
    if n == 0:
        return []
    if not a[0]:
        return identity(n)
    h, u = hermite_with_transform(a)
    return [u[i] for i in range(n) if not any(h[i])]


def solve_rational(rows: Rows, target: Sequence[int]) -> Optional[List[Fraction]]:
    """Solve x·rows = target exactly; None when target is outside the row span."""
    n = len(rows)
    if n == 0:
        return [] if not any(target) else None
    width = len(rows[0])
    # augmented system rowsᵀ x = target
    aug = [[Fraction(rows[i][j]) for i in range(n)] + [Fraction(target[j])] for j in range(width)]
    pivots: List[int] = []
    r = 0
    for col in range(n):
        sel = next((i for i in range(r, width) if aug[i][col] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(width):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(aug[i][n] != 0 for i in range(r, width)):
        return None
    if len(pivots) < n:
        raise ValueError("rows are linearly dependent")
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        solution[col] = aug[i][n]
    return solution


def rational_inverse(m: Rows) -> List[List[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        sel = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if sel is None:
            raise ValueError("matrix is singular")
        aug[col], aug[sel] = aug[sel], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def unimodular_inverse(m: Rows) -> Matrix:
    inverse = rational_inverse(m)
    out: Matrix = []
    for row in inverse:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def rank(rows: Rows) -> int:
    return len(hermite_basis(rows))


def smith_normal_form(m: Rows) -> Tuple[List[int], Matrix, Matrix]:
    """Smith normal form of a square integer matrix.

    Returns (diagonal, U, V) with U·M·V = diag(diagonal), U and V unimodular,
    each diagonal entry non-negative and dividing the next.
    """
    d = to_lists(m)
    n = len(d)
    u = identity(n)
    v = identity(n)

    def row_op(i: int, j: int, s: int, t: int, p: int, q: int) -> None:
        # (row_i, row_j) <- (s*row_i + t*row_j, p*row_i + q*row_j)
        for mat in (d, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [s * x + t * y for x, y in zip(ri, rj)]
            mat[j] = [p * x + q * y for x, y in zip(ri, rj)]

    def col_op(i: int, j: int, s: int, t: int, p: int, q: int) -> None:
        for mat in (d, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i] = s * x + t * y
                row[j] = p * x + q * y

    for k in range(n):
        while True:
            changed = False
            for i in range(k + 1, n):
                if d[i][k]:
                    g, s, t = extended_gcd(d[k][k], d[i][k])
                    a, b = d[k][k] // g, d[i][k] // g
                    row_op(k, i, s, t, -b, a)
                    changed = True
            for j in range(k + 1, n):
                if d[k][j]:
                    g, s, t = extended_gcd(d[k][k], d[k][j])
                    a, b = d[k][k] // g, d[k][j] // g
                    col_op(k, j, s, t, -b, a)
                    changed = True
            if not changed:
                break
        if d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            u[k] = [-x for x in u[k]]

    # enforce the divisibility chain on the diagonal
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i][i], d[j][j]
            if a == 0 and b == 0:
                continue
            if a != 0 and b % a == 0:
                continue
            g, s, t = extended_gcd(a, b)
            # P·diag(a, b)·Q = diag(g, ab/g)
            row_op(i, j, s, t, -b // g, a // g)
            col_op(i, j, 1, 1, -t * b // g, s * a // g)
            d[i][j] = d[j][i] = 0
    # zero entries sort to the end of the chain
    order = sorted(range(n), key=lambda i: (d[i][i] == 0, d[i][i]))
    diagonal = [d[i][i] for i in order]
    u = [u[i] for i in order]
    v = [[row[i] for i in order] for row in v]
    return diagonal, u, v


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else 0
