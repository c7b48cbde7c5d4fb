import random

import pytest

from pentachip.linalg import IntMatrix, UnsupportedSizeError, det, smith_normal_form
from pentachip.matroid import (NotTotallyUnimodularError, RegularMatroid,
                               find_tu_violation, verify_totally_unimodular)
from pentachip.r10 import R10_MATROID
from pentachip.sandpile import TRIANGLE_MATROID

TWO_ELEMENT = RegularMatroid(r=1, n=2, d=IntMatrix.from_rows([[1]]))


class TestTotallyUnimodular:
    def test_identity(self):
        assert verify_totally_unimodular(IntMatrix.identity(5))

    def test_r10_representation(self):
        assert verify_totally_unimodular(R10_MATROID.representation())

    def test_violation(self):
        m = IntMatrix.from_rows([[1, 1], [-1, 1]])
        assert not verify_totally_unimodular(m)
        rows, cols, d = find_tu_violation(m)
        assert (rows, cols) == ((0, 1), (0, 1))
        assert d == 2

    def test_entry_violation(self):
        rows, cols, d = find_tu_violation(IntMatrix.from_rows([[2]]))
        assert d == 2 and rows == (0,) and cols == (0,)

    def test_size_limit(self):
        with pytest.raises(UnsupportedSizeError):
            verify_totally_unimodular(IntMatrix.zero(1, 13))

    def test_constructor_checks(self):
        with pytest.raises(NotTotallyUnimodularError):
            RegularMatroid(r=1, n=2, d=IntMatrix.from_rows([[2]]))
        # trusted constructor skips the check
        RegularMatroid.trusted(r=1, n=2, d=IntMatrix.from_rows([[2]]))

    def test_shape_checks(self):
        with pytest.raises(ValueError):
            RegularMatroid(r=2, n=2, d=IntMatrix.zero(2, 0))
        with pytest.raises(ValueError):
            RegularMatroid(r=0, n=2, d=IntMatrix.zero(0, 2))
        with pytest.raises(ValueError):
            RegularMatroid(r=1, n=3, d=IntMatrix.from_rows([[1]]))


class TestDerivedMatrices:
    def test_triangle_dual(self):
        assert TRIANGLE_MATROID.dual_matrix() == IntMatrix.from_rows([[-1, -1, -1]])

    def test_r10_dual_uses_symmetry(self):
        # D is symmetric for R10, so the dual is [D | -I]
        d = R10_MATROID.d
        dual = R10_MATROID.dual_matrix()
        assert d == d.transpose()
        for i in range(5):
            for j in range(5):
                assert dual[i, j] == d[i, j]
                assert dual[i, 5 + j] == -int(i == j)

    def test_two_element_dual(self):
        assert TWO_ELEMENT.dual_matrix() == IntMatrix.from_rows([[1, -1]])

    def test_triangle_combined(self):
        expected = IntMatrix.from_rows([[1, 0, -1], [0, 1, -1], [-1, -1, -1]])
        assert TRIANGLE_MATROID.combined_k() == expected

    def test_two_element_combined(self):
        assert TWO_ELEMENT.combined_k() == IntMatrix.from_rows([[1, 1], [1, -1]])

    def test_combined_always_symmetric(self):
        rng = random.Random(5)
        matroids = [TRIANGLE_MATROID, TWO_ELEMENT, R10_MATROID]
        while len(matroids) < 20:
            r = rng.randint(1, 3)
            n = rng.randint(r + 1, r + 3)
            d = IntMatrix.from_rows([[rng.choice((-1, 0, 1)) for _ in range(n - r)]
                                     for _ in range(r)])
            try:
                matroids.append(RegularMatroid(r, n, d))
            except NotTotallyUnimodularError:
                continue
        for m in matroids:
            k = m.combined_k()
            assert k == k.transpose()

    def test_kernel_image_duality(self):
        rng = random.Random(17)
        for m in (TRIANGLE_MATROID, TWO_ELEMENT, R10_MATROID):
            a = m.representation()
            dual_t = m.dual_matrix().transpose()
            # im(dual^t) lies in ker(a)
            for _ in range(25):
                x = [rng.randint(-9, 9) for _ in range(m.n - m.r)]
                assert a.matvec(dual_t.matvec(x)) == (0,) * m.r
            # each kernel basis vector of a lies in im(dual^t): with
            # dual^t = [D; -I] the bottom block pins the preimage down
            snf = smith_normal_form(a)
            diag = snf.diagonal()
            for j in range(a.cols):
                if j >= len(diag) or diag[j] == 0:
                    v = snf.V.column(j)
                    assert a.matvec(v) == (0,) * m.r
                    x = tuple(-c for c in v[m.r:])
                    assert dual_t.matvec(x) == v


class TestBases:
    def test_triangle(self):
        assert TRIANGLE_MATROID.enumerate_bases() == [(0, 1), (0, 2), (1, 2)]

    def test_two_element(self):
        assert TWO_ELEMENT.enumerate_bases() == [(0,), (1,)]

    def test_r10_count_equals_det(self):
        bases = R10_MATROID.enumerate_bases()
        assert len(bases) == 162
        assert len(bases) == abs(det(R10_MATROID.combined_k()))

    def test_triangle_count_equals_det(self):
        assert len(TRIANGLE_MATROID.enumerate_bases()) == abs(det(TRIANGLE_MATROID.combined_k()))

    def test_bases_have_unit_determinant(self):
        a = R10_MATROID.representation()
        for basis in R10_MATROID.enumerate_bases():
            assert det(a.submatrix(range(5), basis)) in (-1, 1)

    def test_size_limit(self):
        big = RegularMatroid.trusted(r=1, n=17, d=IntMatrix.from_rows([[0] * 16]))
        with pytest.raises(UnsupportedSizeError):
            big.enumerate_bases()
