"""Generator families: sizes, degrees, matching numbers, certificates."""

from __future__ import annotations

import itertools

import pytest

from extremal_hyper import (
    SetFamily,
    binom,
    certify,
    construct_Ai,
    construct_G,
    construct_H1,
    construct_H2,
    construct_cover_family,
    cover_degree_bound,
    degree_sequence,
    degree_vector,
    is_intersecting,
    matching_number,
    vertex_cover_number,
)


class TestAiFamilies:
    def test_head_window_rule(self):
        for i in (1, 2, 3):
            fam = construct_Ai(10, 3, 2, i)
            head = set(range(1, i * 2 + i))
            for combo in itertools.combinations(range(1, 11), 3):
                want = len(set(combo) & head) >= i
                assert (frozenset(combo) in {frozenset(e.vertices()) for e in fam}) == want

    def test_sizes(self):
        assert len(construct_Ai(8, 2, 2, 1)) == 13
        assert len(construct_Ai(12, 3, 2, 1)) == 100
        assert len(construct_Ai(12, 3, 2, 2)) == 80

    def test_top_window_is_complete_family(self):
        fam = construct_Ai(7, 2, 2, 2)
        assert len(fam) == binom(5, 2)
        assert all(max(e.vertices()) <= 5 for e in fam)

    def test_matching_numbers(self):
        nu, _ = matching_number(construct_Ai(8, 2, 2, 1))
        assert nu == 2
        nu, _ = matching_number(construct_Ai(9, 2, 3, 1))
        assert nu == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            construct_Ai(10, 3, 2, 0)
        with pytest.raises(ValueError):
            construct_Ai(10, 3, 2, 4)
        with pytest.raises(ValueError):
            construct_Ai(4, 3, 2, 2)


class TestGFamily:
    def test_graph_case_is_near_triangle(self):
        fam = construct_G(8, 2, 2)
        got = {frozenset(e.vertices()) for e in fam}
        assert got == {frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})}

    def test_small_case_frozen_values(self):
        fam = construct_G(10, 3, 2)
        assert len(fam) == 22
        nu, _ = matching_number(fam)
        assert nu == 1
        assert is_intersecting(fam)
        seq = degree_sequence(fam).values
        assert seq == (21, 9, 9, 9, 3, 3, 3, 3, 3, 3)
        assert seq[3] == 9 > cover_degree_bound(10, 3, 2) == 8
        tau, _ = vertex_cover_number(fam)
        assert tau == 2

    def test_graph_triple_matching(self):
        fam = construct_G(15, 2, 3)
        assert len(fam) == 8
        nu, _ = matching_number(fam)
        assert nu == 2
        assert degree_sequence(fam).d(5) == 3 > cover_degree_bound(15, 2, 3) == 2

    def test_three_uniform_triple_matching(self):
        fam = construct_G(20, 3, 3)
        assert len(fam) == 131
        nu, _ = matching_number(fam)
        assert nu == 2
        assert degree_sequence(fam).d(6) == 37 > cover_degree_bound(20, 3, 3) == 35

    def test_certify_contract(self):
        info = certify(construct_G(10, 3, 2), 2)
        assert info == {"nu": 1, "bound": 8, "d_4": 9}

    def test_second_block_member_leaves_tiny_residue(self):
        # removing everything that touches the block member {2,3,4} leaves
        # a family with cover number s - 2 = 0 (here: nothing at all)
        fam = construct_G(10, 3, 2)
        block = frozenset({2, 3, 4})
        assert block in {frozenset(e.vertices()) for e in fam}
        residue = [e for e in fam if not set(e.vertices()) & block]
        assert residue == []

    def test_second_block_residue_at_s3(self):
        fam = construct_G(20, 3, 3)
        block = frozenset({3, 4, 5})
        members = {frozenset(e.vertices()) for e in fam}
        assert block in members
        residue = SetFamily.of(
            20, 3, [set(m) for m in members if not m & block]
        )
        tau, wit = vertex_cover_number(residue)
        assert tau == 1
        assert tuple(wit.vertices) == (6,)

    def test_validation(self):
        with pytest.raises(ValueError):
            construct_G(10, 3, 1)
        with pytest.raises(ValueError):
            construct_G(6, 3, 2)


class TestHFamilies:
    def test_h1_frozen_values(self):
        fam = construct_H1(20, 3, 3)
        assert len(fam) == 132
        nu, _ = matching_number(fam)
        assert nu == 2
        assert degree_sequence(fam).d(6) == 38 > 35
        assert frozenset({4, 5, 6}) in {frozenset(e.vertices()) for e in fam}

    def test_h2_frozen_values(self):
        fam = construct_H2(20, 3, 3)
        assert len(fam) == 132
        nu, _ = matching_number(fam)
        assert nu == 2
        assert degree_sequence(fam).d(6) == 38

    def test_h2_tail_window_rule(self):
        fam = construct_H2(20, 3, 3)
        window = {3, 4, 5}
        mid = set(range(3, 7))
        for e in fam:
            verts = set(e.vertices())
            if verts <= mid:
                assert len(verts & window) >= 2

    def test_h_families_beat_g_on_head_degree(self):
        g = certify(construct_G(20, 3, 3), 3)
        h1 = certify(construct_H1(20, 3, 3), 3)
        h2 = certify(construct_H2(20, 3, 3), 3)
        assert h1["d_6"] >= g["d_6"]
        assert h2["d_6"] >= g["d_6"]

    def test_validation(self):
        with pytest.raises(ValueError):
            construct_H1(20, 3, 2)
        with pytest.raises(ValueError):
            construct_H2(20, 2, 3)
        with pytest.raises(ValueError):
            construct_H1(7, 3, 3)


class TestCoverFamily:
    def test_outside_degrees_are_flat(self):
        fam = construct_cover_family(10, 3, [1, 2])
        assert len(fam) == binom(10, 3) - binom(8, 3)
        degs = degree_vector(fam)
        expected = cover_degree_bound(10, 3, 3)
        assert expected == 15
        for v in range(3, 11):
            assert degs[v - 1] == expected

    def test_matching_fills_the_cover(self):
        nu, _ = matching_number(construct_cover_family(10, 2, [1, 2, 3]))
        assert nu == 3

    def test_whole_ground_set_gives_complete_family(self):
        fam = construct_cover_family(6, 2, range(1, 7))
        assert len(fam) == binom(6, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            construct_cover_family(6, 2, [7])
