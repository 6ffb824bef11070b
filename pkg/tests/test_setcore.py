"""Core containers, degrees, closures, and the family file format."""

from __future__ import annotations

import random

import pytest

from extremal_hyper import (
    MAX_GROUND,
    FamilyFormatError,
    KSet,
    MixedFamily,
    SetFamily,
    binom,
    degree,
    degree_sequence,
    degree_vector,
    is_upward_closed,
    m_degree,
    ore_degree,
    parse_family,
    serialize_family,
    upward_closure,
)
from oracles import as_sets, brute_m_degree, brute_ore, brute_upward_closure


def star(n: int, k: int) -> SetFamily:
    return SetFamily.of(
        n, k, [{1} | set(rest) for rest in _combos(range(2, n + 1), k - 1)]
    )


def _combos(pool, r):
    import itertools

    return itertools.combinations(pool, r)


def complete(n: int, k: int) -> SetFamily:
    return SetFamily.of(n, k, [set(c) for c in _combos(range(1, n + 1), k)])


def random_family(rng: random.Random, n: int, k: int, m: int) -> SetFamily:
    pool = [frozenset(c) for c in _combos(range(1, n + 1), k)]
    return SetFamily.of(n, k, rng.sample(pool, min(m, len(pool))))


def random_mixed(rng: random.Random, n: int, cap: int, m: int) -> MixedFamily:
    sets = []
    for _ in range(m):
        size = rng.randint(1, cap)
        sets.append(frozenset(rng.sample(range(1, n + 1), size)))
    return MixedFamily.of(n, max(len(s) for s in sets), sets)


class TestKSet:
    def test_of_and_vertices(self):
        s = KSet.of(2, 5, 3)
        assert s.vertices() == (2, 3, 5)
        assert list(s) == [2, 3, 5]
        assert s.size == 3
        assert s == KSet.from_vertices([5, 3, 2])

    def test_bit_layout(self):
        assert KSet.of(1).bits == 1
        assert KSet.of(3).bits == 4
        assert KSet.of(1, 2).bits == 3

    def test_relations(self):
        assert KSet.of(1, 2).isdisjoint(KSet.of(3, 4))
        assert not KSet.of(1, 2).isdisjoint(KSet.of(2, 3))
        assert KSet.of(2).issubset(KSet.of(1, 2, 3))
        assert not KSet.of(4).issubset(KSet.of(1, 2, 3))

    def test_rejects_bad_vertices(self):
        with pytest.raises(ValueError):
            KSet.of(0)
        with pytest.raises(ValueError):
            KSet.of(-2)
        with pytest.raises(ValueError):
            KSet.of(MAX_GROUND + 1)


class TestFamilies:
    def test_uniform_validation(self):
        with pytest.raises(ValueError):
            SetFamily.of(MAX_GROUND + 1, 2, [])
        with pytest.raises(ValueError):
            SetFamily.of(4, 2, [{1, 2, 3}])
        with pytest.raises(ValueError):
            SetFamily.of(4, 2, [{4, 5}])

    def test_members_deduplicated_and_sorted(self):
        fam = SetFamily.of(4, 2, [{3, 4}, {1, 2}, {3, 4}])
        assert len(fam) == 2
        assert [sorted(e.vertices()) for e in fam] == [[1, 2], [3, 4]]

    def test_membership(self):
        fam = star(4, 2)
        assert KSet.of(1, 3) in fam
        assert KSet.of(2, 3) not in fam

    def test_mixed_tracks_empty_set(self):
        mf = MixedFamily.of(3, 2, [set(), {1, 2}])
        assert mf.has_empty
        assert len(mf) == 2
        assert not MixedFamily.of(3, 2, [{1, 2}]).has_empty


class TestDegrees:
    def test_star_degrees(self):
        fam = star(4, 2)
        assert degree(fam, 1) == 3
        assert degree_vector(fam) == (3, 1, 1, 1)
        assert degree_sequence(fam).values == (3, 1, 1, 1)

    def test_complete_family_degree(self):
        assert degree(complete(5, 3), 1) == binom(4, 2)

    def test_triangle_sequence_pads_with_zeros(self):
        fam = SetFamily.of(5, 2, [{1, 2}, {2, 3}, {1, 3}])
        assert degree_sequence(fam).values == (2, 2, 2, 0, 0)

    def test_sequence_index_bounds(self):
        seq = degree_sequence(star(4, 2))
        assert seq.d(1) == 3
        assert seq.d(4) == 1
        with pytest.raises(ValueError):
            seq.d(0)
        with pytest.raises(ValueError):
            seq.d(5)

    def test_degree_sum_identity(self):
        rng = random.Random(101)
        for _ in range(20):
            n = rng.randint(4, 10)
            k = rng.randint(2, min(4, n - 1))
            fam = random_family(rng, n, k, rng.randint(0, 12))
            assert sum(degree_vector(fam)) == k * len(fam)

    def test_m_degree_against_oracle(self):
        rng = random.Random(202)
        for _ in range(25):
            mf = random_mixed(rng, 8, 3, rng.randint(1, 10))
            plain = as_sets(mf)
            for v in range(1, 9):
                for m in range(1, mf.cap + 1):
                    assert m_degree(mf, v, m) == brute_m_degree(plain, v, m)

    def test_m_degree_range_checks(self):
        mf = MixedFamily.of(4, 2, [{1, 2}, {3}])
        with pytest.raises(ValueError):
            m_degree(mf, 5, 1)
        with pytest.raises(ValueError):
            m_degree(mf, 1, 3)


class TestOreDegree:
    def test_star_example(self):
        assert ore_degree(star(4, 2)) == 2

    def test_complete_family_has_no_missing_set(self):
        assert ore_degree(complete(5, 2)) is None

    def test_empty_family(self):
        assert ore_degree(SetFamily.of(5, 2, [])) == 0

    def test_against_oracle(self):
        rng = random.Random(303)
        for _ in range(25):
            n = rng.randint(4, 8)
            k = rng.randint(2, 3)
            fam = random_family(rng, n, k, rng.randint(0, 10))
            assert ore_degree(fam) == brute_ore(as_sets(fam), n, k)

    def test_bracketed_by_extreme_degrees(self):
        rng = random.Random(404)
        for _ in range(25):
            n = rng.randint(4, 9)
            k = rng.randint(2, 3)
            fam = random_family(rng, n, k, rng.randint(1, 12))
            sigma = ore_degree(fam)
            if sigma is None:
                continue
            seq = degree_sequence(fam)
            assert k * seq.d(n) <= sigma <= k * seq.d(1)


class TestUpwardClosure:
    def test_singleton_example(self):
        up = upward_closure(MixedFamily.of(4, 2, [{1}]))
        got = {frozenset(s.vertices()) for s in up.sets}
        assert got == {
            frozenset({1}),
            frozenset({1, 2}),
            frozenset({1, 3}),
            frozenset({1, 4}),
        }

    def test_against_oracle(self):
        rng = random.Random(505)
        for _ in range(15):
            mf = random_mixed(rng, 6, 3, rng.randint(1, 6))
            got = {frozenset(s.vertices()) for s in upward_closure(mf).sets}
            assert got == brute_upward_closure(as_sets(mf), mf.n, mf.cap)

    def test_idempotent_and_monotone(self):
        rng = random.Random(606)
        for _ in range(15):
            mf = random_mixed(rng, 6, 3, rng.randint(1, 6))
            up = upward_closure(mf)
            assert set(up.masks) >= set(mf.masks)
            again = upward_closure(up)
            assert again.masks == up.masks
            assert is_upward_closed(up, up.n, up.cap)

    def test_is_upward_closed_detects_gap(self):
        assert not is_upward_closed(MixedFamily.of(4, 2, [{1}]), 4, 2)
        assert is_upward_closed(MixedFamily.of(4, 2, []), 4, 2)


class TestFileFormat:
    def test_star_round_trip_text(self):
        fam = star(4, 2)
        text = serialize_family(fam)
        assert text == "4 2\n1 2\n1 3\n1 4\n"
        assert parse_family(text) == fam
        assert fam.to_text() == text

    def test_mixed_round_trip(self):
        mf = MixedFamily.of(5, 3, [{2}, {1, 3, 5}, {2, 4}])
        text = serialize_family(mf)
        assert text == "5 0\n2\n2 4\n1 3 5\n"
        assert parse_family(text) == mf

    def test_comments_and_crlf(self):
        text = "4 2  # ground then k\r\n1 2\r\n# a full-line comment\r\n3 4  # pair\r\n"
        fam = parse_family(text)
        assert isinstance(fam, SetFamily)
        assert len(fam) == 2
        assert "\r" not in serialize_family(fam)

    def test_duplicate_rows_collapse(self):
        fam = parse_family("4 2\n1 2\n1 2\n")
        assert len(fam) == 1

    def test_mixed_cap_is_largest_row(self):
        mf = parse_family("6 0\n1\n2 4 6\n")
        assert isinstance(mf, MixedFamily)
        assert mf.cap == 3

    def test_mixed_header_with_no_rows(self):
        mf = parse_family("5 0\n")
        assert isinstance(mf, MixedFamily)
        assert mf.cap == 0 and len(mf) == 0

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "missing"),
            ("2\n1 2\n", "header"),
            ("x y\n", "malformed"),
            ("99 2\n1 2\n", "ground size"),
            ("4 9\n1 2\n", "k=9"),
            ("4 -1\n1 2\n", "k=-1"),
            ("4 2\n1 1\n", "duplicate vertex"),
            ("4 2\n2 1\n", "ascending"),
            ("4 2\n0 1\n", "out of range"),
            ("4 2\n1 5\n", "out of range"),
            ("4 2\n1 2 3\n", "does not match k"),
            ("4 2\n1\n", "does not match k"),
        ],
    )
    def test_rejects_malformed_input(self, text, fragment):
        with pytest.raises(FamilyFormatError, match=fragment):
            parse_family(text)

    def test_empty_set_has_no_representation(self):
        mf = MixedFamily.of(3, 2, [set(), {1}])
        with pytest.raises(ValueError):
            serialize_family(mf)

    def test_round_trip_random_families(self):
        rng = random.Random(707)
        for _ in range(20):
            n = rng.randint(2, 12)
            k = rng.randint(1, min(4, n))
            fam = random_family(rng, n, k, rng.randint(0, 8))
            assert parse_family(serialize_family(fam)) == fam
        for _ in range(20):
            mf = random_mixed(rng, 10, 4, rng.randint(1, 8))
            assert parse_family(serialize_family(mf)) == mf

    def test_full_width_ground_set(self):
        fam = SetFamily.of(64, 2, [{1, 64}])
        back = parse_family(serialize_family(fam))
        assert back == fam
