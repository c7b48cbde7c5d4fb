"""Exact chip-firing on regular matroids, specialized to the pentagon game.

The package computes sandpile groups of regular matroids from exact integer
linear algebra, decides firing equivalence constructively, and implements the
Gaussian-integer pentagon model of the matroid R10: four firing moves per
node, a canonical representative for each of the 162 equivalence classes, and
certificates for every equivalence it claims.
"""

from .gaussint import GaussInt, GaussMatrix, gauss_solve_via_real, gauss_vec
from .linalg import (DimensionError, IntMatrix, SingularMatrixError, SnfResult,
                     UnsupportedSizeError, det, smith_normal_form, solve_integer)
from .matroid import (NotTotallyUnimodularError, RegularMatroid,
                      find_tu_violation, verify_totally_unimodular)
from .puzzle import Puzzle, generate_puzzle
from .r10 import (ALL_MOVES, R10, R10_MATROID, ZERO_CONFIG, Certificate,
                  FiringMove, MoveKind, PentagonConstants, all_representatives,
                  apply_firing, apply_firings, canonicalize, clear_imaginary_chips,
                  constants, move_delta, neighbors, order_two_element,
                  pentagon_config, recipe_add_six, recipe_add_two_everywhere,
                  solve_firings, total_chips)
from .sandpile import (SandpileGroup, TRIANGLE_MATROID, firing_equivalent,
                       reduce_triangle, sandpile_group)

__version__ = "0.1.0"

__all__ = [
    "ALL_MOVES", "Certificate", "DimensionError", "FiringMove", "GaussInt",
    "GaussMatrix", "IntMatrix", "MoveKind", "NotTotallyUnimodularError",
    "PentagonConstants", "Puzzle", "R10", "R10_MATROID", "RegularMatroid",
    "SandpileGroup", "SingularMatrixError", "SnfResult", "TRIANGLE_MATROID",
    "UnsupportedSizeError", "ZERO_CONFIG", "all_representatives",
    "apply_firing", "apply_firings", "canonicalize", "clear_imaginary_chips",
    "constants", "det", "find_tu_violation", "firing_equivalent",
    "gauss_solve_via_real", "gauss_vec", "generate_puzzle", "move_delta",
    "neighbors", "order_two_element", "pentagon_config", "recipe_add_six",
    "recipe_add_two_everywhere", "reduce_triangle", "sandpile_group",
    "smith_normal_form", "solve_firings", "solve_integer", "total_chips",
    "verify_totally_unimodular",
]
