"""Colexicographic order, rank/unrank, initial segments, and shadows.

Colex order on equal-size sets: A < B iff max(A xor B) lies in B, which for
bit masks is plain integer comparison. Ranks are 0-based. All binomials are
exact Python integers, so there is no overflow regime to report; out-of-range
arguments simply give 0 in line with the usual combinatorial convention.
"""

from __future__ import annotations

import math

from .setcore import KSet, SetFamily

ColexRank = int


def binom(n: int, k: int) -> int:
    """C(n, k), exact; 0 whenever k < 0, k > n, or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def cover_degree_bound(n: int, k: int, s: int) -> int:
    """Degree of a vertex outside a full cover over s-1 vertices.

    binom(n-1, k-1) - binom(n-s, k-1): the recurring right-hand side of the
    degree bounds checked by the verification harness.
    """
    return binom(n - 1, k - 1) - binom(n - s, k - 1)


def colex_compare(a: KSet, b: KSet) -> int:
    """-1, 0 or 1 ordering of two equal-size sets in colex order."""
    if a.size != b.size:
        raise ValueError(f"sets of different sizes {a.size} and {b.size}")
    if a.bits == b.bits:
        return 0
    return -1 if a.bits < b.bits else 1

def colex_rank(s: KSet) -> ColexRank:
    """0-based position of s among all size-|s| sets in colex order."""
    rank = 0
    for i, v in enumerate(s.vertices(), start=1):
        rank += binom(v - 1, i)
    return rank


def colex_unrank(rank: ColexRank, k: int) -> KSet:
    """Inverse of colex_rank for k-element sets."""
    if rank < 0:
        raise ValueError("rank must be non-negative")
    if k < 0:
        raise ValueError("k must be non-negative")
    rest = rank
    verts = []
    for i in range(k, 0, -1):
        # largest vertex c with binom(c-1, i) <= rest
        c = i
        while binom(c, i) <= rest:
            c += 1
        verts.append(c)
        rest -= binom(c - 1, i)
    verts.reverse()
    return KSet.from_vertices(verts)


def colex_initial_segment(n: int, k: int, m: int) -> SetFamily:
    """The first m sets of C([n], k) in colex order."""
    if not 0 <= m <= binom(n, k):
        raise ValueError(f"segment size {m} not in [0, {binom(n, k)}]")
    return SetFamily.from_masks(n, k, (colex_unrank(r, k).bits for r in range(m)))


def shadow(family: SetFamily) -> SetFamily:
    """All (k-1)-sets contained in some member."""
    if family.k < 1:
        raise ValueError("shadow requires uniformity k >= 1")
    out = set()
    for m in family.masks:
        mm = m
        while mm:
            b = mm & -mm
            out.add(m ^ b)
            mm ^= b
    return SetFamily.from_masks(family.n, family.k - 1, out)


def kk_min_shadow_size(n: int, k: int, m: int) -> int:
    """Exact minimum shadow size of an m-set family in C([n], k).

    Computed as the shadow size of the colex initial segment itself; the
    segment minimizes the shadow among families of its cardinality.
    """
    if m == 0:
        return 0
    return len(shadow(colex_initial_segment(n, k, m)))


def complement_family(family: SetFamily) -> SetFamily:
    """{[n] - F : F in family}, an (n-k)-uniform family."""
    full = (1 << family.n) - 1
    return SetFamily.from_masks(family.n, family.n - family.k,
                                (full ^ m for m in family.masks))
