"""Small dense exact linear algebra kernel over Fraction.

Matrices are lists of row lists whose entries are ints or Fractions; all
results are exact.  Multiplication skips zero entries, which matters because
the representation matrices downstream are very sparse.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    mat = zeros(n, n)
    for i in range(n):
        mat[i][i] = Fraction(1)
    return mat


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if not aik:
                continue
            bk = b[k]
            for j in range(cols):
                bkj = bk[j]
                if bkj:
                    oi[j] += aik * bkj
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    out = [Fraction(0)] * len(a)
    for i, row in enumerate(a):
        acc = Fraction(0)
        for x, y in zip(row, v):
            if x and y:
                acc += x * y
        out[i] = acc
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    return all(ra == rb for ra, rb in zip(a, b))


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    mat = [[Fraction(x) for x in row] for row in a]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix) -> list[Vector]:
    """Basis of the right kernel, one vector per free column."""
    if not a:
        return []
    cols = len(a[0])
    reduced, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][free]
        basis.append(vec)
    return basis


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a @ X = b exactly; raises ValueError if inconsistent.

    When the system is underdetermined the free variables are set to zero.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    bcols = len(b[0]) if b else 0
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    reduced, pivots = rref(aug)
    for r in range(len(pivots), rows):
        if any(reduced[r][cols:]):
            if all(not x for x in reduced[r][:cols]):
                raise ValueError("inconsistent linear system")
    for p in pivots:
        if p >= cols:
            raise ValueError("inconsistent linear system")
    x = zeros(cols, bcols)
    for r, p in enumerate(pivots):
        for j in range(bcols):
            x[p][j] = reduced[r][cols + j]
    return x


def column_stack(columns: list[Vector]) -> Matrix:
    if not columns:
        return []
    return [list(entries) for entries in zip(*columns)]


def columns_of(a: Matrix) -> list[Vector]:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


# column-major sparse helpers: cols[j] maps row index to a nonzero entry

SparseCols = list[dict[int, Fraction]]


def to_sparse_cols(mat: Matrix) -> SparseCols:
    n = len(mat)
    cols: SparseCols = [dict() for _ in range(len(mat[0]) if n else 0)]
    for i, row in enumerate(mat):
        for j, val in enumerate(row):
            if val:
                cols[j][i] = Fraction(val)
    return cols


def sparse_mul(a_cols: SparseCols, b_cols: SparseCols) -> SparseCols:
    out: SparseCols = [dict() for _ in b_cols]
    for j, bc in enumerate(b_cols):
        oj = out[j]
        for k, bkj in bc.items():
            for i, aik in a_cols[k].items():
                v = oj.get(i, 0) + aik * bkj
                if v:
                    oj[i] = v
                elif i in oj:
                    del oj[i]
    return out


def sparse_add_scaled(terms: list[tuple[SparseCols, int]], ncols: int) -> SparseCols:
    out: SparseCols = [dict() for _ in range(ncols)]
    for cols, coeff in terms:
        for j, col in enumerate(cols):
            oj = out[j]
            for i, val in col.items():
                v = oj.get(i, 0) + coeff * val
                if v:
                    oj[i] = v
                elif i in oj:
                    del oj[i]
    return out
