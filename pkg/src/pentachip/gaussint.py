"""Gaussian integers and Gaussian-integer matrices.

A :class:`GaussInt` is a pair of plain Python ints (re, im) with exact ring
arithmetic. Linear systems over Z[i] are solved by splitting every entry into
real and imaginary parts: ``(P + Qi)(s + ti) = u + vi`` is equivalent to the
doubled integer system ``[[P, -Q], [Q, P]] @ (s, t) == (u, v)``, which is
handed to :func:`pentachip.linalg.solve_integer`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import DimensionError, IntMatrix, hstack, solve_integer, vstack


@dataclass(frozen=True)
class GaussInt:
    re: int = 0
    im: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise TypeError("GaussInt parts must be int")

    @classmethod
    def coerce(cls, x) -> "GaussInt":
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {type(x).__name__} as GaussInt")

    def __add__(self, other):
        other = GaussInt.coerce(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussInt.coerce(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussInt.coerce(other) - self

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussInt.coerce(other)
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.re == other and self.im == 0
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def times_i(self) -> "GaussInt":
        return GaussInt(-self.im, self.re)

    def divisible_by(self, n: int) -> bool:
        return self.re % n == 0 and self.im % n == 0

    def exact_div(self, n: int) -> "GaussInt":
        if not self.divisible_by(n):
            raise ValueError(f"{self} is not divisible by {n}")
        return GaussInt(self.re // n, self.im // n)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = f"{self.im}i"
        if self.re == 0:
            return im
        return f"{self.re}{im}" if im.startswith("-") else f"{self.re}+{im}"

    __repr__ = __str__


I = GaussInt(0, 1)

GaussVec = tuple[GaussInt, ...]


def gauss_vec(values) -> GaussVec:
    """Coerce a sequence of ints / (re, im) pairs / GaussInts to a GaussVec."""
    out = []
    for x in values:
        if isinstance(x, (GaussInt, int)):
            out.append(GaussInt.coerce(x))
        else:
            re, im = x
            out.append(GaussInt(int(re), int(im)))
    return tuple(out)


def vec_add(a: GaussVec, b: GaussVec) -> GaussVec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: GaussVec, b: GaussVec) -> GaussVec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(a: GaussVec, s) -> GaussVec:
    s = GaussInt.coerce(s)
    return tuple(s * x for x in a)


@dataclass(frozen=True)
class GaussMatrix:
    """Immutable dense matrix over the Gaussian integers."""

    rows: int
    cols: int
    entries: tuple[tuple[GaussInt, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise DimensionError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionError("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> "GaussMatrix":
        entries = tuple(gauss_vec(row) for row in rows)
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        return cls(nrows, ncols, entries)

    @classmethod
    def identity(cls, n: int) -> "GaussMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, key: tuple[int, int]) -> GaussInt:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> GaussVec:
        return self.entries[i]

    def real_part(self) -> IntMatrix:
        return IntMatrix.from_rows([[x.re for x in row] for row in self.entries])

    def imag_part(self) -> IntMatrix:
        return IntMatrix.from_rows([[x.im for x in row] for row in self.entries])

    def matvec(self, vec) -> GaussVec:
        v = gauss_vec(vec)
        if len(v) != self.cols:
            raise DimensionError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(row, v)), GaussInt())
                     for row in self.entries)

    def __matmul__(self, other: "GaussMatrix") -> "GaussMatrix":
        if self.cols != other.rows:
            raise DimensionError("shape mismatch in product")
        cols = [tuple(other.entries[k][j] for k in range(other.rows))
                for j in range(other.cols)]
        return GaussMatrix(self.rows, other.cols,
                           tuple(tuple(sum((a * b for a, b in zip(row, col)), GaussInt())
                                       for col in cols)
                                 for row in self.entries))

    def scale(self, s) -> "GaussMatrix":
        s = GaussInt.coerce(s)
        return GaussMatrix(self.rows, self.cols,
                           tuple(tuple(s * x for x in row) for row in self.entries))

    def __str__(self) -> str:
        return "\n".join("  ".join(f"{str(x):>6s}" for x in row) for row in self.entries)


def real_embedding(m: GaussMatrix) -> IntMatrix:
    """The 2n x 2m integer matrix [[P, -Q], [Q, P]] for m = P + Qi."""
    p = m.real_part()
    q = m.imag_part()
    return vstack(hstack(p, -q), hstack(q, p))


def gauss_solve_via_real(m: GaussMatrix, b) -> GaussVec | None:
    """Solve ``m @ x == b`` over the Gaussian integers.

    The system is embedded into a doubled integer system and solved exactly;
    returns ``None`` when no Z[i] solution exists, and raises
    :class:`pentachip.linalg.SingularMatrixError` when ``m`` is singular over
    Q(i) (the embedded determinant is the squared complex norm of det ``m``,
    so singularity transfers both ways).
    """
    if m.rows != m.cols:
        raise DimensionError("gauss_solve_via_real requires a square matrix")
    b = gauss_vec(b)
    if len(b) != m.rows:
        raise DimensionError("right-hand side length does not match matrix")
    rhs = tuple(x.re for x in b) + tuple(x.im for x in b)
    solution = solve_integer(real_embedding(m), rhs)
    if solution is None:
        return None
    n = m.rows
    x = tuple(GaussInt(solution[k], solution[n + k]) for k in range(n))
    assert m.matvec(x) == b
    return x
