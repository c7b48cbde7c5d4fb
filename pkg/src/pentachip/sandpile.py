"""Sandpile groups of regular matroids and general firing equivalence.

The sandpile group of a matroid in standard form is the integer cokernel of
its combined firing matrix K; its cyclic decomposition is read off the Smith
normal form diagonal. Two integer chip configurations are firing equivalent
exactly when their difference lies in the integer image of K, which
:func:`firing_equivalent` decides constructively by producing a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .linalg import DimensionError, IntMatrix, SingularMatrixError, smith_normal_form
from .linalg import solve_integer
from .matroid import RegularMatroid


@dataclass(frozen=True)
class SandpileGroup:
    """Finite abelian group in invariant-factor form.

    ``invariant_factors`` lists the nontrivial cyclic orders (each >= 2, each
    dividing the next); trivial factors of 1 are stripped. ``order`` is the
    product of all factors, 1 for the trivial group.
    """

    invariant_factors: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        assert all(f >= 2 for f in self.invariant_factors)
        assert all(b % a == 0
                   for a, b in zip(self.invariant_factors, self.invariant_factors[1:]))
        assert self.order == prod(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial group"
        return " + ".join(f"Z/{f}" for f in self.invariant_factors)


def sandpile_group(m: RegularMatroid) -> SandpileGroup:
    """Cokernel of the combined firing matrix, in invariant-factor form."""
    diag = smith_normal_form(m.combined_k()).diagonal()
    if any(d == 0 for d in diag):
        raise SingularMatrixError("combined firing matrix is singular")
    factors = tuple(d for d in diag if d > 1)
    return SandpileGroup(invariant_factors=factors, order=prod(diag))


def firing_equivalent(m: RegularMatroid, c1, c2) -> tuple[int, ...] | None:
    """Witness that two chip configurations differ by integer firings.

    Returns an integer vector ``y`` with ``K @ y == c1 - c2`` when the
    configurations are firing equivalent, ``None`` otherwise. The witness is
    re-verified against K before returning, so a returned vector can be
    trusted as a certificate.
    """
    c1 = tuple(int(x) for x in c1)
    c2 = tuple(int(x) for x in c2)
    if len(c1) != m.n or len(c2) != m.n:
        raise DimensionError(f"chip configurations must have length {m.n}")
    k = m.combined_k()
    diff = tuple(a - b for a, b in zip(c1, c2))
    y = solve_integer(k, diff)
    if y is None:
        return None
    if k.matvec(y) != diff:
        raise AssertionError("firing witness failed verification")
    return y


# The 3-element rank-2 matroid of the triangle graph: representation
# [[1, 0, -1], [0, 1, -1]], three bases, sandpile group Z/3.
TRIANGLE_MATROID = RegularMatroid.trusted(
    r=2, n=3, d=IntMatrix.from_rows([[-1], [-1]]))


def reduce_triangle(config) -> tuple[int, int, int]:
    """Reduce a triangle-matroid configuration to its class representative.

    The representatives are (0,0,0), (1,0,0) and (2,0,0). The reduction fires
    three of the rows of K literally: first the all-(-1) row enough times to
    bring the total into {0, 1, 2}, then (0, 1, -1) to clear the second
    position, then (1, 0, -1) to clear the third. The two clearing moves
    preserve the total, so everything collects in the first position.
    """
    a, b, c = (int(x) for x in config)
    total = a + b + c
    # Fire (-1,-1,-1) floor(total/3) times; a negative count means firing the
    # inverse move, which is equally allowed.
    times = total // 3
    a, b, c = a - times, b - times, c - times
    # Fire (0, 1, -1) exactly -b times to clear the second position.
    a, b, c = a, 0, c + b
    # Fire (1, 0, -1) exactly c times to clear the third position.
    a, b, c = a + c, 0, 0
    assert 0 <= a <= 2
    return (a, b, c)
