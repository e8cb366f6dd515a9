import random
from fractions import Fraction

import pytest

from threshold_spectra.intpoly import divide_exact, evaluate, poly_pow
from threshold_spectra.linalg import bareiss_determinant, charpoly
from threshold_spectra.sequences import adjacency_matrix, parse_sequence


def fraction_det(matrix):
    """Independent determinant oracle: plain Gaussian elimination over Q."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    assert det.denominator == 1
    return int(det)


class TestDeterminant:
    def test_identity(self):
        assert bareiss_determinant([[1, 0], [0, 1]]) == 1

    def test_singular(self):
        assert bareiss_determinant([[1, 2], [2, 4]]) == 0

    def test_empty(self):
        assert bareiss_determinant([]) == 1

    def test_needs_square(self):
        with pytest.raises(ValueError):
            bareiss_determinant([[1, 2, 3], [4, 5, 6]])

    def test_against_fraction_elimination(self):
        rng = random.Random(60221023)
        for _ in range(60):
            n = rng.randint(1, 7)
            m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            assert bareiss_determinant(m) == fraction_det(m)

    def test_zero_pivot_with_swap(self):
        m = [[0, 1, 3], [2, 0, 1], [4, 1, 2]]
        assert bareiss_determinant(m) == fraction_det(m)


class TestCharpoly:
    def test_triangle(self):
        poly = charpoly(adjacency_matrix(parse_sequence("011")))
        assert poly == (-2, -3, 0, 1)  # x^3 - 3x - 2

    def test_single_vertex(self):
        assert charpoly([[0]]) == (0, 1)

    def test_ten_vertex_divisibilities(self):
        poly = charpoly(adjacency_matrix(parse_sequence("(0^2 1^3 0^3 1^2)")))
        assert len(poly) == 11 and poly[-1] == 1
        reduced = poly
        for factor in ((0, 1),) * 3 + ((1, 1),) * 3:
            reduced = divide_exact(reduced, factor)
            assert reduced is not None

    def test_monic_trace_free(self):
        rng = random.Random(42424242)
        for _ in range(20):
            n = rng.randint(1, 8)
            bits = (0,) + tuple(rng.randint(0, 1) for _ in range(n - 1))
            poly = charpoly(adjacency_matrix(bits))
            assert poly[-1] == 1
            assert len(poly) == n + 1
            if n >= 1:
                assert poly[n - 1] == 0

    def test_evaluation_matches_determinant(self):
        bits = parse_sequence("(0^2 1^2 0^1 1^2)")
        adj = adjacency_matrix(bits)
        poly = charpoly(adj)
        n = len(bits)
        for t in (-1, 2, 7, 100):
            shifted = [[(t if i == j else 0) - adj[i][j] for j in range(n)]
                       for i in range(n)]
            assert evaluate(poly, t) == bareiss_determinant(shifted)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            charpoly([[0, 1], [0, 0]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            charpoly([[0, 1]])

    def test_complete_graph(self):
        n = 7
        poly = charpoly(adjacency_matrix((0,) + (1,) * (n - 1)))
        from threshold_spectra.intpoly import mul
        assert poly == mul((-(n - 1), 1), poly_pow((1, 1), n - 1))
