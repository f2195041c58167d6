import random
from math import comb

import pytest

from multiekr import (
    DimensionError,
    Family,
    FormatError,
    Multiset,
    ParameterError,
    count_multisets,
    enumerate_multisets,
    first_row,
    intersect,
    is_t_intersecting,
    is_t_kernel,
    l1_distance,
    max_height,
    rectangle,
    subfamily_containing,
)
from multiekr.core import StaircaseCell
from multiekr.search import build_star_multiset_family


class TestMultiset:
    def test_basic_fields(self):
        m = Multiset((3, 1, 2, 0, 0))
        assert m.n == 5 and m.k == 6 and len(m) == 6
        assert m.multiplicity(1) == 3 and m.multiplicity(4) == 0
        assert m.support() == {1, 2, 3}

    def test_validation(self):
        with pytest.raises(ParameterError):
            Multiset(())
        with pytest.raises(ParameterError):
            Multiset((1, -1))

    def test_immutability_and_hash(self):
        m = Multiset((1, 2))
        with pytest.raises(AttributeError):
            m.mult = (0, 0)
        assert len({Multiset((1, 2)), Multiset((1, 2)), Multiset((2, 1))}) == 2

    def test_canonical_order_is_lex(self):
        assert Multiset((0, 2)) < Multiset((1, 1)) < Multiset((2, 0))

    def test_staircase_roundtrip_exhaustive(self):
        for n in range(1, 4):
            for k in range(0, 4):
                for m in enumerate_multisets(n, k):
                    assert Multiset.from_cells(n, m.cells()) == m

    def test_from_cells_rejects_floating_cell(self):
        with pytest.raises(ParameterError):
            Multiset.from_cells(2, [StaircaseCell(1, 2)])  # row 1 missing

    def test_contains_is_coordinatewise(self):
        assert Multiset((2, 1)).contains(Multiset((1, 1)))
        assert not Multiset((2, 1)).contains(Multiset((0, 2)))
        with pytest.raises(DimensionError):
            Multiset((2, 1)).contains(Multiset((1, 1, 0)))


class TestIntersection:
    def test_worked_example(self):
        f = Multiset((3, 1, 2, 0, 0))
        g = Multiset((2, 2, 0, 1, 1))
        assert intersect(f, g) == Multiset((2, 1, 0, 0, 0))

    def test_idempotent(self):
        f = Multiset((3, 1, 2, 0, 0))
        assert intersect(f, f) == f

    def test_disjoint_supports(self):
        assert intersect(Multiset((1, 1, 0)), Multiset((0, 0, 2))) == Multiset(
            (0, 0, 0)
        )

    def test_dimension_error(self):
        with pytest.raises(DimensionError):
            intersect(Multiset((1,)), Multiset((1, 0)))


class TestL1Distance:
    def test_worked_example_ties_to_intersection(self):
        f = Multiset((3, 1, 2, 0, 0))
        g = Multiset((2, 2, 0, 1, 1))
        assert l1_distance(f, g) == 6
        assert 6 - 6 // 2 == len(intersect(f, g))

    def test_zero_on_equal(self):
        f = Multiset((2, 0, 1))
        assert l1_distance(f, f) == 0

    def test_identity_exhaustive_small(self):
        for n in range(1, 5):
            for k in range(0, 5):
                members = list(enumerate_multisets(n, k))
                for f in members:
                    for g in members:
                        d = l1_distance(f, g)
                        assert d % 2 == 0
                        assert len(intersect(f, g)) == k - d // 2

    def test_identity_randomized(self):
        rng = random.Random(31)
        for _ in range(300):
            n = rng.randint(1, 8)
            k = rng.randint(0, 9)
            pool = [
                Multiset(vec)
                for vec in (_random_vec(rng, n, k), _random_vec(rng, n, k))
            ]
            f, g = pool
            assert len(intersect(f, g)) == k - l1_distance(f, g) // 2


def _random_vec(rng, n, k):
    vec = [0] * n
    for _ in range(k):
        vec[rng.randrange(n)] += 1
    return tuple(vec)


class TestEnumeration:
    @pytest.mark.parametrize("n,k", [(3, 2), (1, 5), (4, 0)])
    def test_counts_match_binomial(self, n, k):
        members = list(enumerate_multisets(n, k))
        assert len(members) == comb(n + k - 1, k)

    def test_counts_exhaustive_grid(self):
        for n in range(1, 7):
            for k in range(0, 7):
                members = list(enumerate_multisets(n, k))
                assert len(members) == comb(n + k - 1, k)
                assert len(set(members)) == len(members)
                assert members == sorted(members)
                assert count_multisets(n, k) == len(members)

    def test_single_column(self):
        assert [m.mult for m in enumerate_multisets(1, 5)] == [(5,)]

    def test_cap_one_gives_subsets(self):
        members = list(enumerate_multisets(4, 3, 1))
        assert len(members) == 4 == comb(4, 3)
        assert all(max(m.mult) == 1 for m in members)

    def test_cap_counts(self):
        for n in range(1, 5):
            for k in range(0, 6):
                for cap in range(1, 5):
                    members = list(enumerate_multisets(n, k, cap))
                    assert len(members) == count_multisets(n, k, cap)
                    assert all(max(m.mult, default=0) <= cap for m in members)

    def test_unsatisfiable_is_empty(self):
        assert list(enumerate_multisets(2, 5, 2)) == []
        assert count_multisets(2, 5, 2) == 0


class TestFamily:
    def test_members_sorted_dedup(self):
        fam = Family([(1, 1), (2, 0), (1, 1), (0, 2)])
        assert [m.mult for m in fam] == [(0, 2), (1, 1), (2, 0)]

    def test_mixed_shapes_rejected(self):
        with pytest.raises(ParameterError):
            Family([(1, 1), (2, 1)])
        with pytest.raises(DimensionError):
            Family([(1, 1), (1, 1, 0)])

    def test_empty_needs_explicit_shape(self):
        with pytest.raises(ParameterError):
            Family([])
        fam = Family.empty(3, 2)
        assert len(fam) == 0 and fam.n == 3 and fam.k == 2

    def test_height_cap_enforced(self):
        with pytest.raises(ParameterError):
            Family([(2, 0)], height_cap=1)
        fam = Family([(1, 1)], height_cap=1)
        assert fam.height_cap == 1

    def test_contains_multiset_or_tuple(self):
        fam = Family([(1, 1), (2, 0)])
        assert Multiset((1, 1)) in fam and (2, 0) in fam
        assert (0, 2) not in fam

    def test_serialization_roundtrip(self, tmp_path):
        fam = Family([(0, 1, 1), (1, 1, 0), (2, 0, 0)])
        path = tmp_path / "fam.txt"
        fam.save(str(path))
        assert Family.load(str(path)) == fam
        assert path.read_text() == "n=3 k=2\n0,1,1\n1,1,0\n2,0,0\n"

    def test_equal_families_serialize_identically(self):
        a = Family([(1, 1), (2, 0)])
        b = Family([(2, 0), (1, 1)])
        assert a == b and a.to_text() == b.to_text()

    def test_format_errors(self):
        with pytest.raises(FormatError):
            Family.from_text("")
        with pytest.raises(FormatError):
            Family.from_text("k=2 n=3\n1,1")
        with pytest.raises(FormatError):
            Family.from_text("n=2 k=2\n1,x")


class TestPredicates:
    def test_t_intersecting_examples(self):
        assert is_t_intersecting(Family([(2, 0), (1, 1)]), 1)
        assert not is_t_intersecting(Family([(2, 0, 0), (0, 2, 0)]), 1)
        all_pairs = Family(list(enumerate_multisets(3, 2)))
        assert not is_t_intersecting(all_pairs, 1)

    def test_degenerate_conventions(self):
        fam = Family([(2, 0), (1, 1)])
        assert is_t_intersecting(fam, 0)
        assert is_t_intersecting(Family.empty(3, 2), 5)
        # the diagonal pair forces t <= k
        assert not is_t_intersecting(Family([(1, 0)]), 2)

    def test_full_rectangle_kernel_equals_plain_intersection(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 4)
            k = rng.randint(1, 4)
            t = rng.randint(0, k)
            pool = list(enumerate_multisets(n, k))
            members = [m for m in pool if rng.random() < 0.5]
            fam = Family(members, n=n, k=k)
            box = rectangle(n, k)
            assert is_t_kernel(fam, box, t) == is_t_intersecting(fam, t)

    def test_star_center_is_kernel(self):
        center = Multiset((1, 1, 0, 0))
        star = build_star_multiset_family(4, 3, 2, center)
        assert is_t_kernel(star, center, 2)

    def test_kernel_dimension_check(self):
        with pytest.raises(DimensionError):
            is_t_kernel(Family([(1, 1)]), Multiset((1, 1, 1)), 1)


class TestSubfamilyContaining:
    def test_zero_region_gives_everything(self):
        fam = Family([(1, 1), (2, 0)])
        assert subfamily_containing(fam, Multiset((0, 0))) == fam

    def test_star_queried_at_center(self):
        center = Multiset((1, 0, 1, 0))
        star = build_star_multiset_family(4, 3, 2, center)
        assert subfamily_containing(star, center) == star

    def test_agrees_with_bruteforce(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(1, 4)
            k = rng.randint(0, 4)
            pool = list(enumerate_multisets(n, k))
            members = [m for m in pool if rng.random() < 0.5]
            fam = Family(members, n=n, k=k)
            region = Multiset(_random_vec(rng, n, rng.randint(0, k)))
            got = subfamily_containing(fam, region)
            want = [
                m
                for m in members
                if all(a >= b for a, b in zip(m.mult, region.mult))
            ]
            assert sorted(got.members) == sorted(want)

    def test_small_tail_bound_for_noncontaining_families(self, small_corpus):
        # either every member contains the region or the containing part is
        # small: at most k * C(nk, k - t - 1) members
        rng = random.Random(5)
        for n, k, t, fam in small_corpus:
            pool = list(enumerate_multisets(n, t))
            region = pool[rng.randrange(len(pool))]
            part = subfamily_containing(fam, region)
            if len(part) == len(fam):
                continue
            allowance = k - t - 1
            bound = 0 if allowance < 0 else k * comb(n * k, allowance)
            assert len(part) <= bound


class TestMaxHeight:
    def test_single_member(self):
        assert max_height(Family([(3, 1, 2, 0, 0)])) == 3

    def test_capped_family(self):
        fam = Family(list(enumerate_multisets(4, 3, 1)), height_cap=1)
        assert fam.max_height() == 1

    def test_empty(self):
        assert Family.empty(3, 2).max_height() == 0

    def test_first_row_and_rectangle(self):
        assert first_row(4) == Multiset((1, 1, 1, 1))
        assert rectangle(2, 3) == Multiset((3, 3))
