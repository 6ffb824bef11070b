"""Exact matching number, vertex cover number, and the graph fast path."""

from __future__ import annotations

import itertools
import random

import pytest

from extremal_hyper import (
    KSet,
    MixedFamily,
    SetFamily,
    find_disjoint_members,
    is_intersecting,
    matching_number,
    max_matching_graph,
    vertex_cover_number,
)
from oracles import as_sets, brute_nu, brute_tau


def star(n: int, k: int) -> SetFamily:
    return SetFamily.of(
        n, k, [{1} | set(r) for r in itertools.combinations(range(2, n + 1), k - 1)]
    )


def complete(n: int, k: int) -> SetFamily:
    return SetFamily.of(n, k, [set(c) for c in itertools.combinations(range(1, n + 1), k)])


def random_uniform(rng: random.Random, n: int, k: int, m: int) -> SetFamily:
    pool = [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]
    return SetFamily.of(n, k, rng.sample(pool, min(m, len(pool))))


def random_mixed(rng: random.Random, n: int, cap: int, m: int) -> MixedFamily:
    sets = [
        frozenset(rng.sample(range(1, n + 1), rng.randint(1, cap))) for _ in range(m)
    ]
    return MixedFamily.of(n, max(len(s) for s in sets), sets)


class TestMatchingNumber:
    def test_path_example(self):
        fam = SetFamily.of(4, 2, [{1, 2}, {3, 4}, {1, 3}])
        nu, wit = matching_number(fam)
        assert nu == 2
        assert wit.size == 2 and wit.is_valid_for(fam)

    def test_star_is_intersecting(self):
        nu, _ = matching_number(star(6, 3))
        assert nu == 1

    def test_empty_family(self):
        nu, wit = matching_number(SetFamily.of(5, 2, []))
        assert nu == 0 and wit.size == 0

    def test_complete_family(self):
        for n in range(2, 9):
            for k in range(1, n + 1):
                nu, _ = matching_number(complete(n, k))
                assert nu == n // k

    def test_against_oracle_uniform(self):
        rng = random.Random(1001)
        for _ in range(40):
            n = rng.randint(3, 9)
            k = rng.randint(1, min(3, n))
            fam = random_uniform(rng, n, k, rng.randint(0, 10))
            nu, wit = matching_number(fam)
            assert nu == brute_nu(as_sets(fam))
            assert wit.is_valid_for(fam)

    def test_against_oracle_mixed(self):
        rng = random.Random(1002)
        for _ in range(30):
            mf = random_mixed(rng, 8, 3, rng.randint(1, 9))
            nu, wit = matching_number(mf)
            assert nu == brute_nu(as_sets(mf))
            assert wit.is_valid_for(mf)

    def test_singletons_force_large_matching(self):
        mf = MixedFamily.of(5, 2, [{1}, {2}, {4, 5}])
        nu, _ = matching_number(mf)
        assert nu == 3

    def test_rejects_empty_member(self):
        mf = MixedFamily.of(4, 2, [set(), {1, 2}])
        with pytest.raises(ValueError):
            matching_number(mf)

    def test_monotone_under_subfamilies(self):
        rng = random.Random(1003)
        fam = random_uniform(rng, 9, 3, 12)
        nu_full, _ = matching_number(fam)
        sub = SetFamily.from_masks(9, 3, fam.masks[:6])
        nu_sub, _ = matching_number(sub)
        assert nu_sub <= nu_full


class TestVertexCover:
    def test_star_cover(self):
        tau, wit = vertex_cover_number(star(5, 2))
        assert tau == 1
        assert tuple(wit.vertices) == (1,)
        assert wit.is_valid_for(star(5, 2))

    def test_perfect_matching(self):
        fam = SetFamily.of(6, 2, [{1, 2}, {3, 4}, {5, 6}])
        tau, _ = vertex_cover_number(fam)
        assert tau == 3

    def test_empty_family(self):
        tau, wit = vertex_cover_number(SetFamily.of(4, 2, []))
        assert tau == 0 and wit.size == 0

    def test_against_oracle(self):
        rng = random.Random(1004)
        for _ in range(30):
            n = rng.randint(3, 8)
            k = rng.randint(1, min(3, n))
            fam = random_uniform(rng, n, k, rng.randint(0, 9))
            tau, wit = vertex_cover_number(fam)
            assert tau == brute_tau(as_sets(fam))
            assert wit.is_valid_for(fam)

    def test_rejects_empty_member(self):
        with pytest.raises(ValueError):
            vertex_cover_number(MixedFamily.of(3, 1, [set()]))

    def test_weak_duality(self):
        rng = random.Random(1005)
        for _ in range(30):
            n = rng.randint(3, 9)
            k = rng.randint(2, min(3, n))
            fam = random_uniform(rng, n, k, rng.randint(1, 10))
            nu, mwit = matching_number(fam)
            tau, _ = vertex_cover_number(fam)
            assert nu <= tau <= k * nu
            # a maximum matching is maximal, so its union is itself a cover
            assert tau <= sum(e.size for e in mwit.edges)


class TestFindDisjointMembers:
    def test_zero_always_succeeds(self):
        wit = find_disjoint_members(SetFamily.of(4, 2, []), 0)
        assert wit is not None and wit.size == 0

    def test_threshold_behaviour(self):
        rng = random.Random(1006)
        for _ in range(25):
            fam = random_uniform(rng, 8, rng.randint(2, 3), rng.randint(1, 9))
            nu, _ = matching_number(fam)
            for r in range(nu + 2):
                wit = find_disjoint_members(fam, r)
                if r <= nu:
                    assert wit is not None and wit.size == r
                    assert wit.is_valid_for(fam)
                else:
                    assert wit is None


class TestGraphFastPath:
    def test_small_examples(self):
        path = SetFamily.of(5, 2, [{1, 2}, {2, 3}, {3, 4}, {4, 5}])
        assert max_matching_graph(path).size == 2
        triangle = SetFamily.of(3, 2, [{1, 2}, {2, 3}, {1, 3}])
        assert max_matching_graph(triangle).size == 1

    def test_requires_graphs(self):
        with pytest.raises(ValueError):
            max_matching_graph(SetFamily.of(5, 3, [{1, 2, 3}]))

    def test_exhaustive_agreement_up_to_n5(self):
        pool = [set(c) for c in itertools.combinations(range(1, 6), 2)]
        for bits in range(1 << len(pool)):
            g = SetFamily.of(5, 2, [pool[i] for i in range(len(pool)) if bits >> i & 1])
            nu, _ = matching_number(g)
            wit = max_matching_graph(g)
            assert wit.size == nu
            assert wit.is_valid_for(g)

    def test_sampled_agreement_larger_graphs(self):
        rng = random.Random(1007)
        for _ in range(150):
            n = rng.randint(6, 9)
            pool = [frozenset(c) for c in itertools.combinations(range(1, n + 1), 2)]
            g = SetFamily.of(n, 2, rng.sample(pool, rng.randint(0, len(pool))))
            nu, _ = matching_number(g)
            assert max_matching_graph(g).size == nu


class TestIntersecting:
    def test_examples(self):
        assert is_intersecting(star(6, 3))
        assert not is_intersecting(SetFamily.of(4, 2, [{1, 2}, {3, 4}]))
        assert is_intersecting(SetFamily.of(4, 2, []))
        assert is_intersecting(SetFamily.of(4, 2, [{1, 2}]))

    def test_matches_matching_number(self):
        rng = random.Random(1008)
        for _ in range(30):
            fam = random_uniform(rng, 8, 2, rng.randint(0, 10))
            nu, _ = matching_number(fam)
            assert is_intersecting(fam) == (nu <= 1)
