"""Exact integer matrix arithmetic: determinants, Smith normal form, solving.

Everything here works on plain Python ints, which are arbitrary precision, so
no overflow handling is needed. Matrices are small (at most 10x10 elsewhere in
the package) and dense; all algorithms are fraction-free.

``solve_integer`` distinguishes two failure modes on purpose: a singular
matrix raises :class:`SingularMatrixError`, while "the system has no integer
solution" is a normal answer reported by returning ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain


class DimensionError(ValueError):
    """Operands have incompatible or invalid dimensions."""


class SingularMatrixError(ValueError):
    """A square matrix required to be invertible has determinant zero."""


class UnsupportedSizeError(ValueError):
    """Input exceeds the documented size limit of an exhaustive algorithm."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimensions")
        if len(self.entries) != self.rows:
            raise DimensionError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        return cls(nrows, ncols, entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(-x for x in row) for row in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError("shape mismatch in product")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                               for row in self.entries))

    def matvec(self, vec) -> tuple[int, ...]:
        v = tuple(vec)
        if len(v) != self.cols:
            raise DimensionError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def submatrix(self, row_idx, col_idx) -> "IntMatrix":
        return IntMatrix.from_rows([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:4d}" for x in row) for row in self.entries)


def hstack(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    if left.rows != right.rows:
        raise DimensionError("row count mismatch in hstack")
    return IntMatrix(left.rows, left.cols + right.cols,
                     tuple(a + b for a, b in zip(left.entries, right.entries)))


def vstack(top: IntMatrix, bottom: IntMatrix) -> IntMatrix:
    if top.cols != bottom.cols:
        raise DimensionError("column count mismatch in vstack")
    return IntMatrix(top.rows + bottom.rows, top.cols, top.entries + bottom.entries)


def det(m: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination.

    All intermediate quantities are integers; the divisions performed are
    exact by construction, so the result is the exact determinant.
    """
    if not m.is_square:
        raise DimensionError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form decomposition ``U @ m @ V == D``.

    ``U`` and ``V`` are unimodular (determinant +-1); ``D`` is diagonal with
    nonnegative entries, each dividing the next.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        return self.D.diagonal()


def _min_abs_nonzero(a: list[list[int]], t: int, nrows: int, ncols: int):
    """Position of the smallest-magnitude nonzero entry of a[t:, t:].

    Ties break row-major so elimination is deterministic.
    """
    best = None
    best_abs = None
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            x = row[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best_abs is None or ax < best_abs:
                    best, best_abs = (i, j), ax
                    if ax == 1:
                        return best
    return best


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form over the integers with unimodular transforms.

    Pivot rule: the nonzero entry of minimal absolute value in the working
    submatrix, ties broken row-major. Diagonal entries are normalized to be
    nonnegative by row negation.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, mult):
        # row[dst] += mult * row[src]
        ad, asrc = a[dst], a[src]
        for j in range(ncols):
            ad[j] += mult * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(nrows):
            ud[j] += mult * usrc[j]

    def add_col(dst, src, mult):
        # col[dst] += mult * col[src]
        for row in a:
            row[dst] += mult * row[src]
        for row in v:
            row[dst] += mult * row[src]

    for t in range(min(nrows, ncols)):
        while True:
            piv = _min_abs_nonzero(a, t, nrows, ncols)
            if piv is None:
                break
            if piv != (t, t):
                if piv[0] != t:
                    swap_rows(t, piv[0])
                if piv[1] != t:
                    swap_cols(t, piv[1])
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // pivot))
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // pivot))
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                # Floor-division remainders are smaller than the pivot, so the
                # next pass picks a strictly smaller one; this terminates.
                continue
            offender = None
            for i in range(t + 1, nrows):
                row = a[i]
                for j in range(t + 1, ncols):
                    if row[j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                # Pull the non-divisible row up so the pivot shrinks to the
                # gcd; this is what produces the divisibility chain.
                add_row(t, offender, 1)
                continue
            break
        if piv is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SnfResult(U=IntMatrix.from_rows(u),
                     D=IntMatrix.from_rows(a),
                     V=IntMatrix.from_rows(v))


def solve_integer(m: IntMatrix, b) -> tuple[int, ...] | None:
    """Solve ``m @ x == b`` over the integers for square nonsingular ``m``.

    Uses the Smith decomposition: with ``U m V = D``, an integer solution
    exists iff ``D y = U b`` is solvable, i.e. each coordinate of ``U b`` is
    divisible by the matching diagonal entry; then ``x = V y``.

    Returns the solution vector, or ``None`` when ``b`` is not in the integer
    image of ``m``. Raises :class:`SingularMatrixError` when ``det m == 0``.
    """
    if not m.is_square:
        raise DimensionError("solve_integer requires a square matrix")
    b = tuple(int(x) for x in b)
    if len(b) != m.rows:
        raise DimensionError("right-hand side length does not match matrix")
    snf = smith_normal_form(m)
    diag = snf.diagonal()
    if any(d == 0 for d in diag):
        raise SingularMatrixError("matrix is singular")
    c = snf.U.matvec(b)
    y = []
    for ci, di in zip(c, diag):
        if ci % di != 0:
            return None
        y.append(ci // di)
    x = snf.V.matvec(y)
    assert m.matvec(x) == b
    return x


def solve_integer_many(m: IntMatrix, vectors) -> list[tuple[int, ...] | None]:
    """Batch form of :func:`solve_integer` sharing one Smith decomposition."""
    if not m.is_square:
        raise DimensionError("solve_integer requires a square matrix")
    snf = smith_normal_form(m)
    diag = snf.diagonal()
    if any(d == 0 for d in diag):
        raise SingularMatrixError("matrix is singular")
    out: list[tuple[int, ...] | None] = []
    for b in vectors:
        b = tuple(int(x) for x in b)
        if len(b) != m.rows:
            raise DimensionError("right-hand side length does not match matrix")
        c = snf.U.matvec(b)
        y = []
        ok = True
        for ci, di in zip(c, diag):
            if ci % di != 0:
                ok = False
                break
            y.append(ci // di)
        out.append(snf.V.matvec(y) if ok else None)
    return out


def flatten(m: IntMatrix) -> tuple[int, ...]:
    return tuple(chain.from_iterable(m.entries))
