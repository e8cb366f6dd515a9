import itertools
import random
from fractions import Fraction

import pytest

from threshold_spectra import linalg
from threshold_spectra.intpoly import (
    add,
    divide_exact,
    evaluate,
    mul,
    mul_xk,
    poly_pow,
)
from threshold_spectra.sequences import (
    adjacency_matrix,
    block_counts,
    enumerate_connected,
    nth_connected,
    parse_sequence,
    to_blocks,
)
from threshold_spectra.spectra import (
    char_poly,
    char_poly_of_sequence,
    energy,
    gamma,
    index_sequences,
    is_cospectral,
    multiplicity_minus_one,
    multiplicity_zero,
    q_polynomial,
    spectral_summary,
)

PRECISION = Fraction(1, 10 ** 10)


def complete_graph(n):
    return (0,) + (1,) * (n - 1)


class TestMultiplicities:
    def test_ten_vertex_example(self):
        blocks = to_blocks(parse_sequence("(0^2 1^3 0^3 1^2)"))
        assert multiplicity_zero(blocks) == 3
        assert multiplicity_minus_one(blocks) == 3

    def test_complete_graph(self):
        for n in (2, 5, 11):
            blocks = to_blocks(complete_graph(n))
            assert multiplicity_zero(blocks) == 0
            assert multiplicity_minus_one(blocks) == n - 1

    def test_four_block_member(self):
        blocks = to_blocks(parse_sequence("(0^3 1^6 0^3 1^2)"))
        assert multiplicity_zero(blocks) == 4

    def test_six_block_member(self):
        blocks = to_blocks(parse_sequence("(0^1 1^3 0^1 1^4 0^3 1^2)"))
        assert multiplicity_minus_one(blocks) == 7

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            multiplicity_zero(((0, 2),))
        with pytest.raises(ValueError):
            multiplicity_minus_one(((0, 1), (1, 2), (0, 1)))

    def test_matches_counted_roots_small_corpus(self):
        for n in range(2, 9):
            for bits in enumerate_connected(n):
                blocks = to_blocks(bits)
                oracle = linalg.charpoly(adjacency_matrix(bits))
                m0 = 0
                reduced = oracle
                while (q := divide_exact(reduced, (0, 1))) is not None:
                    reduced = q
                    m0 += 1
                m1 = 0
                while (q := divide_exact(reduced, (1, 1))) is not None:
                    reduced = q
                    m1 += 1
                assert m0 == multiplicity_zero(blocks)
                assert m1 == multiplicity_minus_one(blocks)


class TestIndexSequences:
    def test_worked_set_odd(self):
        assert index_sequences(7, 4) == {
            (2, 3, 4, 5), (2, 3, 4, 7), (2, 3, 6, 7), (2, 5, 6, 7),
            (4, 5, 6, 7)}

    def test_worked_set_even(self):
        assert index_sequences(6, 4) == {
            (1, 2, 3, 4), (1, 2, 3, 6), (1, 2, 5, 6), (1, 4, 5, 6),
            (3, 4, 5, 6)}

    def test_length_zero(self):
        assert index_sequences(4, 0) == {()}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            index_sequences(4, -1)
        with pytest.raises(ValueError):
            index_sequences(4, 5)

    def test_matches_subset_filter(self):
        for b in range(1, 11):
            for length in range(0, b + 1):
                brute = set()
                for combo in itertools.combinations(range(1, b + 1), length):
                    if combo and combo[-1] % 2 != b % 2:
                        continue
                    if any((x + y) % 2 == 0 for x, y in zip(combo, combo[1:])):
                        continue
                    brute.add(combo)
                if length == 0:
                    brute = {()}
                assert index_sequences(b, length) == brute


class TestGamma:
    def test_symbolic_pairs(self):
        rng = random.Random(11)
        for _ in range(25):
            a1, a2, a3, a4 = (rng.randint(1, 9) for _ in range(4))
            blocks = ((0, a1), (1, a2), (0, a3), (1, a4))
            assert gamma(blocks, 2) == a1 * a2 + a1 * a4 + a3 * a4
            assert gamma(blocks, 1) == a2 + a4
            assert gamma(blocks, 3) == a2 * a3 * a4

    def test_concrete_triple(self):
        blocks = ((0, 2), (1, 3), (0, 3), (1, 2))
        assert gamma(blocks, 3) == 18

    def test_length_zero_is_one(self):
        rng = random.Random(12)
        for _ in range(10):
            counts = [rng.randint(1, 5) for _ in range(rng.randint(1, 6))]
            blocks = tuple((k % 2, c) for k, c in enumerate(counts))
            assert gamma(blocks, 0) == 1

    def test_full_length_is_product(self):
        blocks = ((0, 2), (1, 3), (0, 5), (1, 7))
        assert gamma(blocks, 4) == 2 * 3 * 5 * 7

    def test_nonnegative(self):
        rng = random.Random(13)
        for _ in range(20):
            counts = [rng.randint(1, 6) for _ in range(rng.randint(2, 8))]
            blocks = tuple((k % 2, c) for k, c in enumerate(counts))
            for length in range(len(counts) + 1):
                assert gamma(blocks, length) >= 0


def corrected_four_block_expansion(a1, a2, a3, a4):
    """x^2 y^2 - (a2+a4) x^2 y - (a1a2+a1a4+a3a4) xy + (a2a3a4) x + a1a2a3a4,
    the sign pattern certified against the determinant route."""
    y = (1, 1)
    xy = (0, 1, 1)
    total = mul(xy, xy)
    total = add(total, mul_xk(tuple(-(a2 + a4) * c for c in y), 2))
    total = add(total, tuple(-(a1 * a2 + a1 * a4 + a3 * a4) * c for c in xy))
    total = add(total, (0, a2 * a3 * a4))
    total = add(total, (a1 * a2 * a3 * a4,))
    return total


class TestCompanionFactor:
    def test_four_block_symbolic_identity(self):
        rng = random.Random(314159)
        for _ in range(20):
            a1, a2, a3, a4 = (rng.randint(1, 6) for _ in range(4))
            blocks = ((0, a1), (1, a2), (0, a3), (1, a4))
            assert q_polynomial(blocks) == corrected_four_block_expansion(
                a1, a2, a3, a4)

    def test_complete_graph_factorization(self):
        for n in (2, 3, 7, 12):
            blocks = ((0, 1), (1, n - 1))
            assert q_polynomial(blocks) == (-(n - 1), -(n - 2), 1)
            assert q_polynomial(blocks) == mul((-(n - 1), 1), (1, 1))

    def test_four_block_linear_factor(self):
        q = q_polynomial(((0, 3), (1, 6), (0, 3), (1, 2)))
        assert divide_exact(q, (3, 1)) is not None

    def test_monic_of_degree_b(self):
        rng = random.Random(21)
        for _ in range(40):
            count = rng.randint(1, 4) * 2
            counts = [rng.randint(1, 4) for _ in range(count)]
            blocks = tuple((k % 2, c) for k, c in enumerate(counts))
            q = q_polynomial(blocks)
            assert len(q) == count + 1
            assert q[-1] == 1

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            q_polynomial(((0, 2),))


class TestCharPoly:
    def test_four_block_closed_product(self):
        blocks = to_blocks(parse_sequence("(0^3 1^6 0^3 1^2)"))
        expected = mul_xk(
            mul(mul(poly_pow((1, 1), 6), (3, 1)), (36, -10, -9, 1)), 4)
        assert char_poly(blocks) == expected

    def test_complete_graph(self):
        for n in (2, 4, 9):
            expected = mul((-(n - 1), 1), poly_pow((1, 1), n - 1))
            assert char_poly(to_blocks(complete_graph(n))) == expected

    def test_matches_determinant_route_corpus(self):
        for n in range(2, 10):
            for bits in enumerate_connected(n):
                formula = char_poly(to_blocks(bits))
                oracle = linalg.charpoly(adjacency_matrix(bits))
                assert formula == oracle, bits

    def test_single_extra_minus_one_iff_leading_singleton(self):
        for n in range(2, 9):
            for bits in enumerate_connected(n):
                blocks = to_blocks(bits)
                counts = block_counts(blocks)
                q = q_polynomial(blocks)
                once = divide_exact(q, (1, 1))
                twice = divide_exact(once, (1, 1)) if once is not None else None
                if counts[0] == 1:
                    assert once is not None and twice is None
                    s1 = sum(c - 1 for c in counts[1::2])
                    assert multiplicity_minus_one(blocks) == s1 + 1
                else:
                    assert once is None

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            char_poly(((0, 1), (1, 1), (0, 2)))

    def test_sequence_with_trailing_isolated_vertices(self):
        core = parse_sequence("011")
        padded = core + (0, 0)
        assert char_poly_of_sequence(padded) == mul_xk(
            char_poly_of_sequence(core), 2)

    def test_all_isolated(self):
        assert char_poly_of_sequence((0, 0, 0)) == (0, 0, 0, 1)


class TestCospectrality:
    def test_reflexive(self):
        bits = parse_sequence("(0^2 1^3 0^3 1^2)")
        assert is_cospectral(bits, bits)

    def test_family_members_differ(self):
        g = parse_sequence("(0^3 1^6 0^3 1^2)")
        gp = parse_sequence("(0^4 1^3 0^3 1^4)")
        assert not is_cospectral(g, gp)

    def test_path_vs_triangle(self):
        assert not is_cospectral(parse_sequence("001"), parse_sequence("011"))


class TestEnergy:
    def test_single_edge_exact(self):
        assert energy(parse_sequence("01"), PRECISION) == (2, 2)

    def test_complete_fourteen(self):
        lo, hi = energy(complete_graph(14), PRECISION)
        assert lo <= 26 <= hi
        assert hi - lo <= PRECISION

    def test_equienergetic_pair_overlap(self):
        tight = Fraction(1, 10 ** 12)
        e1 = energy(parse_sequence("(0^3 1^6 0^3 1^2)"), tight)
        e2 = energy(parse_sequence("(0^4 1^3 0^3 1^4)"), tight)
        assert e1[0] <= e2[1] and e2[0] <= e1[1]
        assert abs(e1[0] - e2[0]) < Fraction(1, 10 ** 9)

    def test_width_respected(self):
        rng = random.Random(55)
        for _ in range(15):
            n = rng.randint(2, 12)
            bits = nth_connected(n, rng.getrandbits(n - 2) if n > 2 else 0)
            lo, hi = energy(bits, PRECISION)
            assert 0 <= hi - lo <= PRECISION

    def test_isolated_vertices_do_not_change_energy(self):
        bits = parse_sequence("0111")
        lo, hi = energy(bits + (0, 0, 0), PRECISION)
        lo2, hi2 = energy(bits, PRECISION)
        assert (lo, hi) == (lo2, hi2)

    def test_empty_graph(self):
        assert energy((0, 0, 0), PRECISION) == (0, 0)

    def test_rejects_empty_and_bad_precision(self):
        with pytest.raises(ValueError):
            energy((), PRECISION)
        with pytest.raises(ValueError):
            energy((0, 1), Fraction(0))


class TestSpectralSummary:
    def test_ten_vertex_example(self):
        summary = spectral_summary(parse_sequence("(0^2 1^3 0^3 1^2)"),
                                   PRECISION)
        assert summary.n == 10
        assert summary.m0 == 3
        assert summary.m_minus1 == 3
        assert len(summary.nontrivial_factor) - 1 == 4

    def test_internal_consistency_random(self):
        rng = random.Random(808)
        for _ in range(20):
            n = rng.randint(2, 12)
            bits = nth_connected(n, rng.getrandbits(n - 2) if n > 2 else 0)
            s = spectral_summary(bits, PRECISION)
            assert s.m0 + s.m_minus1 + (len(s.nontrivial_factor) - 1) == n
            assert s.nontrivial_factor[0] != 0
            assert evaluate(s.nontrivial_factor, -1) != 0
            assert s.char_poly == linalg.charpoly(adjacency_matrix(bits))
            assert sum(r.multiplicity for r in s.roots) == n
            assert s.energy_hi - s.energy_lo <= PRECISION
            assert all(a.hi <= b.lo for a, b in zip(s.roots, s.roots[1:]))

    def test_energy_upper_bound_below_complete(self):
        s = spectral_summary(parse_sequence("(0^3 1^6 0^3 1^2)"), PRECISION)
        assert s.energy_hi < 24

    def test_complete_graph_energy_exact(self):
        s = spectral_summary(complete_graph(9), PRECISION)
        assert s.energy_lo <= 16 <= s.energy_hi

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            spectral_summary((0, 1, 0), PRECISION)

    def test_record_shape(self):
        rec = spectral_summary(parse_sequence("011"), PRECISION).to_record()
        assert rec["sequence"] == "(0^1 1^2)"
        assert rec["char_poly"] == [-2, -3, 0, 1]
        # spectrum {2, -1, -1}: the integer root is hit exactly
        assert rec["energy"]["lo"] == "4.000000000000000"
        assert rec["energy"]["hi"] == "4.000000000000000"
        assert rec["roots"][0] == {"lo": "-1/1", "hi": "-1/1", "multiplicity": 2}


class TestFloatCrossCheck:
    def test_against_floating_eigenvalues(self):
        # redundant sanity check only; the exact pipeline is authoritative
        numpy = pytest.importorskip("numpy")
        rng = random.Random(404)
        for _ in range(15):
            n = rng.randint(2, 13)
            bits = nth_connected(n, rng.getrandbits(n - 2) if n > 2 else 0)
            lo, hi = energy(bits, PRECISION)
            mat = numpy.array(adjacency_matrix(bits), dtype=float)
            float_energy = float(numpy.abs(numpy.linalg.eigvalsh(mat)).sum())
            assert abs(float_energy - float((lo + hi) / 2)) < 1e-6
