from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pentachip.gaussint import (GaussInt, GaussMatrix, gauss_solve_via_real,
                                gauss_vec, real_embedding)
from pentachip.linalg import DimensionError, SingularMatrixError
from pentachip.r10 import R10

gauss_ints = st.builds(GaussInt, st.integers(-50, 50), st.integers(-50, 50))


class TestGaussInt:
    @given(gauss_ints, gauss_ints, gauss_ints)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == GaussInt()

    @given(gauss_ints)
    def test_norm(self, a):
        assert a.norm() == (a * a.conjugate()).re
        assert a.norm() >= 0
        assert (a.norm() == 0) == (a == GaussInt())

    def test_product_formula(self):
        # (a+bi)(c+di) = (ac-bd) + (ad+bc)i
        assert GaussInt(1, 2) * GaussInt(3, 4) == GaussInt(-5, 10)

    def test_int_mixing(self):
        assert 2 + GaussInt(1, 1) == GaussInt(3, 1)
        assert 2 * GaussInt(1, 1) == GaussInt(2, 2)
        assert GaussInt(5, 0) == 5

    def test_times_i(self):
        assert GaussInt(2, 3).times_i() == GaussInt(-3, 2)

    def test_exact_div(self):
        assert GaussInt(6, -12).exact_div(6) == GaussInt(1, -2)
        assert not GaussInt(6, -11).divisible_by(6)
        with pytest.raises(ValueError):
            GaussInt(1, 0).exact_div(2)

    def test_str(self):
        assert str(GaussInt(1, 1)) == "1+i"
        assert str(GaussInt(0, -1)) == "-i"
        assert str(GaussInt(-5, -1)) == "-5-i"
        assert str(GaussInt(3, 0)) == "3"


def qi_elimination_solver(m: GaussMatrix, b):
    """Field solve over Q(i) with Fraction pairs, then integrality check.

    Independent of the embedding route: straightforward Gauss-Jordan on
    (re, im) Fraction pairs.
    """
    n = m.rows
    rows = [[(Fraction(m[i, j].re), Fraction(m[i, j].im)) for j in range(n)]
            + [(Fraction(b[i].re), Fraction(b[i].im))]
            for i in range(n)]

    def c_mul(x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def c_sub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    def c_inv(x):
        d = x[0] * x[0] + x[1] * x[1]
        return (x[0] / d, -x[1] / d)

    for col in range(n):
        pivot_row = next((r for r in range(col, n)
                          if rows[r][col] != (0, 0)), None)
        if pivot_row is None:
            raise SingularMatrixError("singular over Q(i)")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        inv = c_inv(rows[col][col])
        rows[col] = [c_mul(inv, x) for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != (0, 0):
                factor = rows[r][col]
                rows[r] = [c_sub(x, c_mul(factor, y))
                           for x, y in zip(rows[r], rows[col])]
    solution = [row[n] for row in rows]
    if any(x[0].denominator != 1 or x[1].denominator != 1 for x in solution):
        return None
    return tuple(GaussInt(int(x[0]), int(x[1])) for x in solution)


class TestGaussSolve:
    def test_identity(self):
        b = gauss_vec([(1, 2), (3, -4), (0, 0), (9, 9), (-1, 0)])
        assert gauss_solve_via_real(GaussMatrix.identity(5), b) == b

    def test_worked_example(self):
        source = gauss_vec([(3, 1), (4, -6), (7, 1), (-8, -8), (3, 0)])
        target = gauss_vec([0, 1, 0, 0, 0])
        diff = tuple(t - s for t, s in zip(target, source))
        x = gauss_solve_via_real(R10.complex_firing, diff)
        assert x == gauss_vec([(-5, -1), (-4, 1), (-4, 3), (4, -1), (-1, 0)])

    def test_unit_vector_unsolvable(self):
        # (1,0,0,0,0) is a nonzero canonical representative, so it is not in
        # the image of the complex firing matrix
        assert gauss_solve_via_real(R10.complex_firing, gauss_vec([1, 0, 0, 0, 0])) is None

    def test_singular(self):
        m = GaussMatrix.from_rows([[(1, 1), (1, 1)], [(1, 1), (1, 1)]])
        with pytest.raises(SingularMatrixError):
            gauss_solve_via_real(m, gauss_vec([(1, 0), (0, 0)]))

    def test_non_square(self):
        m = GaussMatrix.from_rows([[(1, 0), (0, 0)]])
        with pytest.raises(DimensionError):
            gauss_solve_via_real(m, gauss_vec([(1, 0)]))

    def test_embedding_blocks(self):
        e = real_embedding(R10.complex_firing)
        assert (e.rows, e.cols) == (10, 10)
        p = R10.complex_firing.real_part()
        q = R10.complex_firing.imag_part()
        for i in range(5):
            for j in range(5):
                assert e[i, j] == p[i, j]
                assert e[i, 5 + j] == -q[i, j]
                assert e[5 + i, j] == q[i, j]
                assert e[5 + i, 5 + j] == p[i, j]

    @given(st.lists(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
                             min_size=3, max_size=3),
                    min_size=3, max_size=3),
           st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
                    min_size=3, max_size=3))
    @settings(max_examples=200)
    def test_agrees_with_field_elimination_oracle(self, mat_rows, b_pairs):
        m = GaussMatrix.from_rows(mat_rows)
        b = gauss_vec(b_pairs)
        try:
            expected = qi_elimination_solver(m, b)
        except SingularMatrixError:
            with pytest.raises(SingularMatrixError):
                gauss_solve_via_real(m, b)
            return
        got = gauss_solve_via_real(m, b)
        if expected is None:
            assert got is None
        else:
            # solutions of a nonsingular system are unique
            assert got == expected
