from fractions import Fraction

import pytest

from threshold_spectra.hunt import (
    UnionFind,
    classify_and_find,
    classify_by_energy,
    find_borderenergetic,
    find_equienergetic_pairs,
)
from threshold_spectra.sequences import enumerate_connected, parse_sequence
from threshold_spectra.spectra import energy, is_cospectral

PRECISION = Fraction(1, 10 ** 10)
TIGHT = Fraction(1, 10 ** 12)


class TestUnionFind:
    def test_basic(self):
        uf = UnionFind(5)
        uf.union(0, 1)
        uf.union(3, 4)
        assert uf.find(0) == uf.find(1)
        assert uf.find(3) == uf.find(4)
        assert uf.find(0) != uf.find(3)
        uf.union(1, 4)
        assert uf.find(0) == uf.find(3)


class TestClassify:
    def test_order_three_two_singletons(self):
        classes = classify_by_energy(3, PRECISION)
        assert len(classes) == 2
        assert all(len(c.members) == 1 for c in classes)

    def test_partition_covers_everything(self):
        classes = classify_by_energy(8, PRECISION)
        members = [bits for cls in classes for bits, _ in cls.members]
        assert len(members) == 64
        assert set(members) == set(enumerate_connected(8))
        for cls in classes:
            assert list(cls.members) == sorted(cls.members)

    def test_tightening_never_merges(self):
        coarse = classify_by_energy(10, Fraction(1, 10 ** 6))
        fine = classify_by_energy(10, TIGHT)
        coarse_of = {}
        for k, cls in enumerate(coarse):
            for bits, _ in cls.members:
                coarse_of[bits] = k
        for cls in fine:
            homes = {coarse_of[bits] for bits, _ in cls.members}
            assert len(homes) == 1

    def test_order_guard(self):
        with pytest.raises(ValueError):
            classify_by_energy(25, PRECISION)
        with pytest.raises(ValueError):
            classify_by_energy(1, PRECISION)


class TestEquienergeticSearch:
    def test_order_two_empty(self):
        result = find_equienergetic_pairs(2, PRECISION)
        assert result.classes == ()

    def test_reported_pairs_are_noncospectral(self):
        result = find_equienergetic_pairs(10, PRECISION)
        for cls in result.classes:
            polys = {p for _, p in cls.members}
            assert len(polys) >= 2
            seqs = [bits for bits, _ in cls.members]
            assert any(not is_cospectral(a, b)
                       for i, a in enumerate(seqs) for b in seqs[i + 1:])

    def test_order_nine_matches_pairwise_bruteforce(self):
        result = find_equienergetic_pairs(9, TIGHT)
        intervals = {bits: energy(bits, TIGHT)
                     for bits in enumerate_connected(9)}
        brute_pairs = set()
        seqs = sorted(intervals)
        for i, a in enumerate(seqs):
            for b in seqs[i + 1:]:
                ea, eb = intervals[a], intervals[b]
                if ea[0] <= eb[1] and eb[0] <= ea[1] and not is_cospectral(a, b):
                    brute_pairs.add((a, b))
        class_of = {}
        for k, cls in enumerate(result.classes):
            for bits, _ in cls.members:
                class_of[bits] = k
        for a, b in brute_pairs:
            assert class_of.get(a) is not None
            assert class_of.get(a) == class_of.get(b)
        reported = set()
        for cls in result.classes:
            seqs = [bits for bits, _ in cls.members]
            for i, a in enumerate(seqs):
                for b in seqs[i + 1:]:
                    if not is_cospectral(a, b):
                        reported.add((a, b))
        assert brute_pairs <= reported

    def test_stats_shape(self):
        result = find_equienergetic_pairs(8, PRECISION)
        assert result.stats["graphs"] == 64
        assert result.stats["classes_total"] >= 1
        assert "elapsed_seconds" in result.stats


class TestBorderenergetic:
    def test_order_three_empty(self):
        assert find_borderenergetic(3, PRECISION) == []

    def test_complete_graph_always_excluded(self):
        for n in range(4, 9):
            hits = find_borderenergetic(n, PRECISION)
            assert (0,) + (1,) * (n - 1) not in hits

    def test_order_nine_candidates(self):
        hits = find_borderenergetic(9, TIGHT)
        expected = {
            parse_sequence("(0^1 1^1 0^1 1^6)"),
            parse_sequence("(0^1 1^4 0^1 1^3)"),
        }
        assert set(hits) == expected

    def test_consistent_across_precisions(self):
        assert set(find_borderenergetic(9, PRECISION)) == set(
            find_borderenergetic(9, TIGHT))


class TestParallel:
    def test_parallel_matches_sequential(self):
        sequential = classify_and_find(9, PRECISION, processes=1)
        parallel = classify_and_find(9, PRECISION, processes=2)
        assert sequential[0] == parallel[0]
        assert sequential[1].classes == parallel[1].classes
        assert sequential[1].borderenergetic == parallel[1].borderenergetic
