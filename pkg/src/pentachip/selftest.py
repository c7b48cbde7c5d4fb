"""Built-in verification suite runnable from the CLI.

Each check re-derives one of the package's load-bearing facts from scratch:
the group structure from the Smith normal form, the basis count against the
determinant, the stored inverse table, the worked canonicalization trace, the
pairwise inequivalence of all 162 representatives, randomized algebraic
properties, the triangle-matroid regression, the integer/Gaussian solvability
correspondence, the order-2 element, and puzzle soundness.

Checks accept an injectable :class:`pentachip.r10.PentagonConstants` so a
test harness can corrupt a constant and confirm the matching check fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from time import perf_counter

from .gaussint import GaussInt, GaussMatrix, gauss_solve_via_real, gauss_vec, vec_sub
from .linalg import smith_normal_form, solve_integer_many
from .r10 import (ALL_MOVES, R10, R10_MATROID, ZERO_CONFIG, PentagonConstants,
                  all_representatives, apply_firing, apply_firings, canonicalize,
                  clear_imaginary_chips, order_two_element, pentagon_config,
                  recipe_add_six, recipe_add_two_everywhere, solve_firings,
                  total_chips)
from .puzzle import generate_puzzle
from .sandpile import TRIANGLE_MATROID, firing_equivalent, reduce_triangle, sandpile_group

WORKED_INPUT = gauss_vec([(3, 1), (4, -6), (7, 1), (-8, -8), (3, 0)])
WORKED_REAL_FORM = (10, -4, 22, -17, 10)
WORKED_CANONICAL = (0, 1, 0, 0, 0)
WORKED_CERTIFICATE = gauss_vec([(-5, -1), (-4, 1), (-4, 3), (4, -1), (-1, 0)])


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _random_config(rng: random.Random):
    return gauss_vec([(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(5)])


def check_group_structure(consts: PentagonConstants) -> str:
    diag = smith_normal_form(consts.firing_matrix).diagonal()
    factors = tuple(d for d in diag if d > 1)
    if factors != (3, 3, 3, 6):
        raise AssertionError(f"invariant factors {factors}, expected (3, 3, 3, 6)")
    order = 1
    for d in diag:
        order *= d
    if order != 162:
        raise AssertionError(f"group order {order}, expected 162")
    return "invariant factors (3, 3, 3, 6), order 162"


def check_basis_count(consts: PentagonConstants) -> str:
    from .linalg import det

    bases = R10_MATROID.enumerate_bases()
    kdet = abs(det(consts.firing_matrix))
    if len(bases) != 162 or kdet != 162:
        raise AssertionError(f"{len(bases)} bases vs |det| {kdet}, expected 162 = 162")
    return "162 bases = |det of firing matrix|"


def check_inverse_table(consts: PentagonConstants) -> str:
    expected = GaussMatrix.identity(5).scale(6)
    got = consts.complex_firing @ consts.complex_firing_inv_x6
    if got != expected:
        raise AssertionError("complex firing matrix times stored table is not 6*I")
    return "stored inverse table times firing matrix is exactly 6*I"


def check_worked_example(consts: PentagonConstants) -> str:
    real_form = clear_imaginary_chips(WORKED_INPUT)
    if real_form != WORKED_REAL_FORM:
        raise AssertionError(f"imaginary clearing gave {real_form}")
    canonical = canonicalize(WORKED_INPUT)
    if canonical != WORKED_CANONICAL:
        raise AssertionError(f"canonical form {canonical}")
    cert = solve_firings(WORKED_INPUT, pentagon_config(canonical), consts)
    if cert is None or cert.x != WORKED_CERTIFICATE:
        raise AssertionError(f"certificate {None if cert is None else cert.x}")
    return "worked trace: real form, canonical form and certificate all match"


def check_representatives(consts: PentagonConstants) -> str:
    reps = [pentagon_config(r) for r in all_representatives()]
    if len(reps) != 162:
        raise AssertionError(f"{len(reps)} representatives, expected 162")
    for rep in reps:
        if pentagon_config(canonicalize(rep)) != rep:
            raise AssertionError(f"{rep} does not canonicalize to itself")
    pairs = 0
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if solve_firings(reps[i], reps[j], consts) is not None:
                raise AssertionError(f"representatives {i} and {j} are equivalent")
            pairs += 1
    return f"162 self-canonical representatives, {pairs} pairs all inequivalent"


def check_random_properties(consts: PentagonConstants, configs: int = 1000) -> str:
    rng = random.Random(0xC0FFEE)
    for _ in range(configs):
        c = _random_config(rng)
        canon = canonicalize(c)
        if canonicalize(pentagon_config(canon)) != canon:
            raise AssertionError(f"canonicalize not idempotent on {c}")
        cert = solve_firings(c, pentagon_config(canon), consts)
        if cert is None:
            raise AssertionError(f"no certificate from {c} to its canonical form")
        if consts.complex_firing.matvec(cert.x) != vec_sub(pentagon_config(canon), c):
            raise AssertionError(f"certificate for {c} does not reproduce the difference")
        parity = total_chips(c) % 2
        for move in ALL_MOVES:
            fired = apply_firing(c, move)
            if canonicalize(fired) != canon:
                raise AssertionError(f"canonical form changed by {move} on {c}")
            if total_chips(fired) % 2 != parity:
                raise AssertionError(f"{move} changed chip parity on {c}")
    return f"{configs} random configurations: idempotent, firing invariant, certified, parity kept"


def check_triangle_matroid(consts: PentagonConstants) -> str:
    group = sandpile_group(TRIANGLE_MATROID)
    if group.invariant_factors != (3,) or group.order != 3:
        raise AssertionError(f"triangle group {group}")
    reps = [(0, 0, 0), (1, 0, 0), (2, 0, 0)]
    for i in range(3):
        for j in range(i + 1, 3):
            if firing_equivalent(TRIANGLE_MATROID, reps[i], reps[j]) is not None:
                raise AssertionError(f"triangle representatives {i}, {j} equivalent")
    rng = random.Random(3)
    for _ in range(100):
        c = tuple(rng.randint(-30, 30) for _ in range(3))
        reduced = reduce_triangle(c)
        if reduced not in reps:
            raise AssertionError(f"{c} reduced to non-representative {reduced}")
        if firing_equivalent(TRIANGLE_MATROID, c, reduced) is None:
            raise AssertionError(f"{c} not equivalent to its reduction {reduced}")
    return "triangle matroid: group Z/3, 3 inequivalent representatives, reduction sound"


def check_solvability_correspondence(consts: PentagonConstants, samples: int = 200) -> str:
    rng = random.Random(0xBEEF)
    agreements = 0
    solvable = 0
    rhs = []
    gauss_rhs = []
    for trial in range(samples):
        if trial % 4 == 0:
            # force a solvable instance by pushing a random vector through K
            y = [rng.randint(-6, 6) for _ in range(10)]
            vw = consts.firing_matrix.matvec(y)
        else:
            vw = tuple(rng.randint(-10, 10) for _ in range(10))
        rhs.append(vw)
        gauss_rhs.append(gauss_vec([(vw[k], vw[5 + k]) for k in range(5)]))
    int_solutions = solve_integer_many(consts.firing_matrix, rhs)
    for vw, int_sol, gb in zip(rhs, int_solutions, gauss_rhs):
        gauss_sol = gauss_solve_via_real(consts.complex_firing, gb)
        if (int_sol is None) != (gauss_sol is None):
            raise AssertionError(f"solvability mismatch on {vw}")
        agreements += 1
        solvable += int_sol is not None
    return f"{agreements} samples agree between the 10x10 integer and 5x5 Gaussian systems ({solvable} solvable)"


def check_order_two(consts: PentagonConstants) -> str:
    h = order_two_element()
    if h != (3, 0, 0, 0, 0):
        raise AssertionError(f"order-2 element {h}")
    doubled = tuple(GaussInt(2 * x) for x in h)
    if canonicalize(doubled) != (0, 0, 0, 0, 0):
        raise AssertionError("doubling the order-2 element is not the identity")
    if canonicalize(gauss_vec([1, 1, 1, 1, 1])) != h:
        raise AssertionError("all-ones configuration is not in the order-2 class")
    if solve_firings(gauss_vec([1, 1, 1, 1, 1]), pentagon_config(h), consts) is None:
        raise AssertionError("all-ones and 3-chips forms are not connected by firings")
    plus_two = apply_firings(ZERO_CONFIG, recipe_add_two_everywhere())
    if plus_two != gauss_vec([2, 2, 2, 2, 2]):
        raise AssertionError(f"+2-everywhere recipe gave {plus_two}")
    for node in range(5):
        effect = apply_firings(ZERO_CONFIG, recipe_add_six(node))
        expected = gauss_vec([6 if k == node else 0 for k in range(5)])
        if effect != expected:
            raise AssertionError(f"+6 recipe at node {node} gave {effect}")
    return "order-2 class verified; +2-everywhere and +6-at-node recipes exact"


def check_puzzles(consts: PentagonConstants, count: int = 100) -> str:
    rng = random.Random(0x5EED)
    for k in range(count):
        seed = rng.getrandbits(64)
        difficulty = 1 + k % 50
        puzzle = generate_puzzle(seed, difficulty)
        if canonicalize(puzzle.config) != (0, 0, 0, 0, 0):
            raise AssertionError(f"puzzle seed={seed} d={difficulty} is not solvable to zero")
        again = generate_puzzle(seed, difficulty)
        if again != puzzle:
            raise AssertionError(f"puzzle seed={seed} d={difficulty} is not reproducible")
    return f"{count} seeded puzzles all solvable to zero and reproducible"


ALL_CHECKS = [
    ("group-structure", check_group_structure),
    ("basis-count", check_basis_count),
    ("inverse-table", check_inverse_table),
    ("worked-example", check_worked_example),
    ("representatives", check_representatives),
    ("random-properties", check_random_properties),
    ("triangle-matroid", check_triangle_matroid),
    ("solvability-correspondence", check_solvability_correspondence),
    ("order-two", check_order_two),
    ("puzzles", check_puzzles),
]


def run_checks(consts: PentagonConstants = R10) -> list[CheckResult]:
    results = []
    for name, check in ALL_CHECKS:
        start = perf_counter()
        try:
            detail = check(consts)
            ok = True
        except AssertionError as exc:
            detail = str(exc)
            ok = False
        results.append(CheckResult(name=name, ok=ok, detail=detail,
                                   seconds=perf_counter() - start))
    return results
