"""Chip-firing on R10: the pentagon game over the Gaussian integers.

R10 is the 10-element, rank-5 regular matroid from Seymour's decomposition
theorem. Because its standard-form representation [I_5 | D] has a symmetric
circulant D, the 10-dimensional integer firing lattice folds into the
5-dimensional Gaussian-integer lattice spanned by the columns of the complex
firing matrix ``I_5 + D*i``. A chip configuration is then one Gaussian integer
per pentagon node: the real part counts real chips, the imaginary part counts
imaginary chips, and the neighbors of node k are nodes (k-1) mod 5 and
(k+1) mod 5.

Four firing moves are available at each node, differing only by a unit of
Z[i]:

* A:    add 1+i to the node, -i to each neighbor (a column of the matrix)
* B:    add -1+i to the node, 1 to each neighbor (i times an A firing)
* -A:   the inverse of A
* -B:   the inverse of B

Each equivalence class contains exactly one configuration with no imaginary
chips, 0 or 3 chips on the distinguished node (index 0 here) and 0-2 chips on
every other node; there are 162 of them. :func:`canonicalize` computes that
representative, and :func:`solve_firings` certifies equivalence of two
configurations with the exact multiset of firings connecting them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .gaussint import GaussInt, GaussMatrix, GaussVec, gauss_vec, vec_sub
from .linalg import IntMatrix
from .matroid import RegularMatroid

NODES = 5


def neighbors(node: int) -> tuple[int, int]:
    return ((node - 1) % NODES, (node + 1) % NODES)


def _circulant(first_row) -> list[list[int]]:
    return [[first_row[(j - i) % NODES] for j in range(NODES)] for i in range(NODES)]


# Symmetric circulant: 1 on the diagonal, -1 between pentagon neighbors.
_D_ROWS = _circulant([1, -1, 0, 0, -1])

R10_MATROID = RegularMatroid.trusted(r=5, n=10, d=IntMatrix.from_rows(_D_ROWS))


@dataclass(frozen=True)
class PentagonConstants:
    """The fixed matrices of the pentagon game.

    ``representation`` is the 5x10 standard-form TU matrix of R10;
    ``firing_matrix`` the symmetric 10x10 stack of it and its dual;
    ``complex_firing`` its 5x5 Gaussian fold, whose columns are the A-firing
    deltas; and ``complex_firing_inv_x6`` is exactly 6 times the inverse of
    ``complex_firing``, kept in integer form (the inverse itself has
    denominator 6).
    """

    representation: IntMatrix
    firing_matrix: IntMatrix
    complex_firing: GaussMatrix
    complex_firing_inv_x6: GaussMatrix

    def verify(self) -> None:
        """Check complex_firing @ complex_firing_inv_x6 == 6*I exactly."""
        expected = GaussMatrix.identity(NODES).scale(6)
        got = self.complex_firing @ self.complex_firing_inv_x6
        if got != expected:
            raise AssertionError("stored inverse-times-6 table is wrong")


R10 = PentagonConstants(
    representation=R10_MATROID.representation(),
    firing_matrix=R10_MATROID.combined_k(),
    complex_firing=GaussMatrix.from_rows(
        [[(int(i == j), row[j]) for j in range(NODES)]
         for i, row in enumerate(_D_ROWS)]),
    complex_firing_inv_x6=GaussMatrix.from_rows(
        _circulant([GaussInt(3, -1), GaussInt(1, 1), GaussInt(-1, 1),
                    GaussInt(-1, 1), GaussInt(1, 1)])),
)
R10.verify()


def constants() -> PentagonConstants:
    return R10


PentagonConfig = GaussVec

ZERO_CONFIG: PentagonConfig = gauss_vec([0] * NODES)


def pentagon_config(values) -> PentagonConfig:
    v = gauss_vec(values)
    if len(v) != NODES:
        raise ValueError(f"a pentagon configuration has {NODES} nodes, got {len(v)}")
    return v


class MoveKind(Enum):
    A = "A"
    B = "B"
    NEG_A = "-A"
    NEG_B = "-B"


# Multiplying an A delta by these units gives the other three deltas.
_KIND_UNIT = {
    MoveKind.A: GaussInt(1, 0),
    MoveKind.B: GaussInt(0, 1),
    MoveKind.NEG_A: GaussInt(-1, 0),
    MoveKind.NEG_B: GaussInt(0, -1),
}


@dataclass(frozen=True)
class FiringMove:
    node: int
    kind: MoveKind

    def __post_init__(self) -> None:
        if not 0 <= self.node < NODES:
            raise ValueError(f"node must be in 0..{NODES - 1}, got {self.node}")


def move_delta(move: FiringMove) -> PentagonConfig:
    """The configuration change of a single firing.

    An A firing at node k adds column k of the complex firing matrix: 1+i at
    the node, -i at each neighbor. B is i times that, and the Neg moves are
    negations.
    """
    unit = _KIND_UNIT[move.kind]
    delta = [GaussInt()] * NODES
    delta[move.node] = unit * GaussInt(1, 1)
    for nb in neighbors(move.node):
        delta[nb] = unit * GaussInt(0, -1)
    return tuple(delta)


ALL_MOVES = [FiringMove(node, kind) for kind in MoveKind for node in range(NODES)]


def apply_firing(config: PentagonConfig, move: FiringMove) -> PentagonConfig:
    delta = move_delta(move)
    return tuple(c + d for c, d in zip(config, delta))


def apply_firings(config: PentagonConfig, moves) -> PentagonConfig:
    for move in moves:
        config = apply_firing(config, move)
    return config


def total_chips(config: PentagonConfig) -> int:
    """Total chip count, real and imaginary together.

    A and -A firings leave this total unchanged; B and -B change it by +2 and
    -2. Its parity is therefore invariant under all firings.
    """
    return sum(c.re + c.im for c in config)


def clear_imaginary_chips(config: PentagonConfig) -> tuple[int, ...]:
    """Remove all imaginary chips by (implicit) B firings; return real parts.

    Firing -B at node k once converts one imaginary chip there into real
    chips: it adds 1-i to the node and -1 to both neighbors. Done b_k times at
    every node k (with b_k the imaginary count, negative counts meaning B
    firings), the net real effect at node k is b_k - b_{k-1} - b_{k+1}, and
    all imaginary parts vanish. This computes that closed form directly.
    """
    imag = [c.im for c in config]
    return tuple(
        config[k].re + imag[k] - imag[(k - 1) % NODES] - imag[(k + 1) % NODES]
        for k in range(NODES))


CanonicalRep = tuple[int, ...]

DISTINGUISHED_NODE = 0


def canonicalize(config: PentagonConfig) -> CanonicalRep:
    """The unique equivalent representative with small nonnegative real chips.

    Output shape: no imaginary chips, 0 or 3 chips on the distinguished node
    (index 0), 0..2 chips on every other node.

    Steps: clear imaginary chips; remember the parity of the total; subtract
    the distinguished node's count from every node (adding a multiple of the
    order-2 class, which is represented by the all-ones configuration);
    reduce every node mod 3 with nonnegative remainder (each +-3 adjustment
    again adds the order-2 class, via its 3-chips-on-one-node form); finally,
    if the parity of the result disagrees with the remembered parity, the
    accumulated order-2 contributions were odd, so add its 3-chips form on
    the distinguished node to cancel them.
    """
    config = pentagon_config(config)
    real = clear_imaginary_chips(config)
    is_even = sum(real) % 2 == 0
    at_distinguished = real[DISTINGUISHED_NODE]
    shifted = [x - at_distinguished for x in real]
    reduced = [x % 3 for x in shifted]
    if (sum(reduced) % 2 == 0) != is_even:
        reduced[DISTINGUISHED_NODE] += 3
    return tuple(reduced)


@dataclass(frozen=True)
class Certificate:
    """Firing recipe between two configurations.

    ``x[k].re`` is the net number of A firings at node k and ``x[k].im`` the
    net number of B firings (negative values meaning the inverse moves).
    Applying them adds ``complex_firing @ x`` to a configuration.
    """

    x: GaussVec

    def to_moves(self) -> list[FiringMove]:
        """Expand the net counts into an explicit firing sequence."""
        moves = []
        for node, count in enumerate(self.x):
            a_kind = MoveKind.A if count.re > 0 else MoveKind.NEG_A
            moves.extend([FiringMove(node, a_kind)] * abs(count.re))
            b_kind = MoveKind.B if count.im > 0 else MoveKind.NEG_B
            moves.extend([FiringMove(node, b_kind)] * abs(count.im))
        return moves


def solve_firings(source: PentagonConfig, target: PentagonConfig,
                  consts: PentagonConstants = R10) -> Certificate | None:
    """Certificate of firings from ``source`` to ``target``, if one exists.

    Multiplies the difference by the stored integer table of 6 times the
    inverse firing matrix; the difference is in the firing lattice exactly
    when every product entry is divisible by 6. The quotient is verified
    against the firing matrix before being returned.
    """
    source = pentagon_config(source)
    target = pentagon_config(target)
    diff = vec_sub(target, source)
    scaled = consts.complex_firing_inv_x6.matvec(diff)
    if not all(entry.divisible_by(6) for entry in scaled):
        return None
    x = tuple(entry.exact_div(6) for entry in scaled)
    if consts.complex_firing.matvec(x) != diff:
        raise AssertionError("firing certificate failed verification")
    return Certificate(x=x)


def all_representatives() -> list[CanonicalRep]:
    """The 162 canonical representatives, in lexicographic order."""
    return [(first, *rest)
            for first in (0, 3)
            for rest in product((0, 1, 2), repeat=NODES - 1)]


def order_two_element() -> CanonicalRep:
    """Representative of the unique order-2 class: 3 chips on node 0.

    The all-ones configuration lies in the same class; doubling either one is
    firing equivalent to the zero configuration.
    """
    return (3, 0, 0, 0, 0)


def recipe_add_two_everywhere() -> list[FiringMove]:
    """Firings that add exactly 2 real chips to every node: A and B at each."""
    moves = []
    for node in range(NODES):
        moves.append(FiringMove(node, MoveKind.A))
        moves.append(FiringMove(node, MoveKind.B))
    return moves


def recipe_add_six(node: int) -> list[FiringMove]:
    """Firings that add exactly 6 real chips at ``node`` and nothing else.

    Three A firings and a -B firing on the node, one A and one B firing on
    each neighbor, one -A and one B firing on each non-neighbor; 12 moves.
    The per-node net counts are a column of the inverse-times-6 table, so the
    total effect is 6 times a unit vector.
    """
    if not 0 <= node < NODES:
        raise ValueError(f"node must be in 0..{NODES - 1}, got {node}")
    adjacent = set(neighbors(node))
    moves = [FiringMove(node, MoveKind.A)] * 3 + [FiringMove(node, MoveKind.NEG_B)]
    for other in range(NODES):
        if other == node:
            continue
        if other in adjacent:
            moves.append(FiringMove(other, MoveKind.A))
            moves.append(FiringMove(other, MoveKind.B))
        else:
            moves.append(FiringMove(other, MoveKind.NEG_A))
            moves.append(FiringMove(other, MoveKind.B))
    return moves
