"""Regular matroids in standard form and their firing matrix.

A regular matroid is represented here by the block matrix ``A = [I_r | D]``
with ``A`` totally unimodular. From it we derive the dual representation
``[D^t | -I]`` and the symmetric n x n matrix ``K`` obtained by stacking the
two, whose integer image defines firing equivalence. Only standard-form inputs
are accepted; callers with a general TU matrix must row-reduce it first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .linalg import IntMatrix, UnsupportedSizeError, det, hstack, vstack

# Exhaustive minor checking is exponential: sum_k C(rows,k)*C(cols,k) minors.
MAX_TU_COLS = 12
# Basis enumeration walks all C(n, r) column subsets.
MAX_BASES_GROUND_SET = 16


class NotTotallyUnimodularError(ValueError):
    """Raised when a claimed-TU matrix has a minor outside {-1, 0, 1}.

    Carries one violating minor: ``rows``/``cols`` are the selected index
    tuples and ``minor_det`` its determinant.
    """

    def __init__(self, rows: tuple[int, ...], cols: tuple[int, ...], minor_det: int):
        self.rows = rows
        self.cols = cols
        self.minor_det = minor_det
        super().__init__(
            f"not totally unimodular: minor with rows {rows} and cols {cols} "
            f"has determinant {minor_det}")


def find_tu_violation(m: IntMatrix) -> tuple[tuple[int, ...], tuple[int, ...], int] | None:
    """Search every square minor of ``m`` for one outside {-1, 0, 1}.

    Returns ``(rows, cols, det)`` for the first violation in order of
    increasing minor size, or ``None`` if the matrix is totally unimodular.
    The check is exhaustive and exponential in the matrix size, hence the
    hard cap of ``MAX_TU_COLS`` columns (and rows).
    """
    if m.cols > MAX_TU_COLS or m.rows > MAX_TU_COLS:
        raise UnsupportedSizeError(
            f"totally-unimodular check supports at most {MAX_TU_COLS} columns, "
            f"got {m.rows}x{m.cols}")
    for k in range(1, min(m.rows, m.cols) + 1):
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                d = det(m.submatrix(rows, cols))
                if d not in (-1, 0, 1):
                    return rows, cols, d
    return None


def verify_totally_unimodular(m: IntMatrix) -> bool:
    """True iff every square minor of ``m`` lies in {-1, 0, 1}."""
    return find_tu_violation(m) is None


@dataclass(frozen=True)
class RegularMatroid:
    """Regular matroid given by the standard-form representation [I_r | D].

    Construction verifies total unimodularity of the full representation by
    default; use :meth:`trusted` for built-in matrices that are already known
    to be TU (the exhaustive check is exponential, see
    :func:`find_tu_violation`).
    """

    r: int
    n: int
    d: IntMatrix
    check: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        if not (1 <= self.r < self.n):
            raise ValueError(f"need n > r >= 1, got r={self.r}, n={self.n}")
        if (self.d.rows, self.d.cols) != (self.r, self.n - self.r):
            raise ValueError(
                f"D must be {self.r}x{self.n - self.r}, got {self.d.rows}x{self.d.cols}")
        if self.check:
            violation = find_tu_violation(self.representation())
            if violation is not None:
                raise NotTotallyUnimodularError(*violation)

    @classmethod
    def trusted(cls, r: int, n: int, d: IntMatrix) -> "RegularMatroid":
        return cls(r, n, d, check=False)

    def representation(self) -> IntMatrix:
        """The r x n standard-form matrix [I_r | D]."""
        return hstack(IntMatrix.identity(self.r), self.d)

    def dual_matrix(self) -> IntMatrix:
        """The (n-r) x n representation [D^t | -I] of the dual matroid."""
        return hstack(self.d.transpose(), -IntMatrix.identity(self.n - self.r))

    def combined_k(self) -> IntMatrix:
        """The symmetric n x n firing matrix stacking [I|D] over [D^t|-I]."""
        return vstack(self.representation(), self.dual_matrix())

    def enumerate_bases(self) -> list[tuple[int, ...]]:
        """All r-subsets of columns that are linearly independent.

        For a TU representation every independent r x r selection has
        determinant +-1. Enumeration is combinatorial (C(n, r) determinant
        evaluations) and capped at ``MAX_BASES_GROUND_SET`` ground-set
        elements.
        """
        if self.n > MAX_BASES_GROUND_SET:
            raise UnsupportedSizeError(
                f"basis enumeration supports at most {MAX_BASES_GROUND_SET} "
                f"ground-set elements, got {self.n}")
        a = self.representation()
        all_rows = range(self.r)
        bases = []
        for cols in combinations(range(self.n), self.r):
            if det(a.submatrix(all_rows, cols)) != 0:
                bases.append(cols)
        return bases

    def basis_count_bound(self) -> int:
        return comb(self.n, self.r)
