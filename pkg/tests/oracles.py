"""Brute-force reference implementations used to cross-check the package.

Everything here works on plain frozensets of ints and deliberately avoids
the bitmask machinery under test. These are slow on purpose: no pruning
beyond the obvious, no shared state, no cleverness. Keep inputs small.
"""

from __future__ import annotations

import itertools
from typing import Iterable


def as_sets(family) -> list[frozenset[int]]:
    """Convert a SetFamily or MixedFamily into plain frozensets."""
    return [frozenset(member.vertices()) for member in family]


def brute_nu(sets: Iterable[frozenset[int]]) -> int:
    """Largest number of pairwise disjoint members, by exhaustive recursion."""
    items = list(sets)

    def best(idx: int, used: frozenset[int]) -> int:
        if idx == len(items):
            return 0
        take = 0
        if not items[idx] & used:
            take = 1 + best(idx + 1, used | items[idx])
        return max(take, best(idx + 1, used))

    return best(0, frozenset())


def brute_tau(sets: Iterable[frozenset[int]]) -> int:
    items = [s for s in sets]
    if not items:
        return 0
    support = sorted(set().union(*items))
    for size in range(0, len(support) + 1):
        for cand in itertools.combinations(support, size):
            cset = set(cand)
            if all(s & cset for s in items):
                return size
    raise AssertionError("support itself always covers")


def brute_shadow(sets: Iterable[frozenset[int]]) -> set[frozenset[int]]:
    out = set()
    for s in sets:
        for v in s:
            out.add(s - {v})
    return out


def colex_key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s, reverse=True))


def brute_colex_rank(s: frozenset[int]) -> int:
    """Number of |s|-subsets of positive integers preceding s in colex order.

    Every earlier set lives inside [1, max(s)], so enumerating there is
    exhaustive.
    """
    k = len(s)
    if k == 0:
        return 0
    top = max(s)
    me = colex_key(s)
    return sum(
        1
        for combo in itertools.combinations(range(1, top + 1), k)
        if colex_key(combo) < me
    )


def brute_initial_segment(n: int, k: int, m: int) -> list[frozenset[int]]:
    allk = sorted(
        (frozenset(c) for c in itertools.combinations(range(1, n + 1), k)),
        key=colex_key,
    )
    return allk[:m]


def brute_sunflower(
    sets: Iterable[frozenset[int]], r: int
) -> tuple[frozenset[int], tuple[frozenset[int], ...]] | None:
    """Find r members whose pairwise intersections all equal the same kernel."""
    items = list(dict.fromkeys(sets))
    for combo in itertools.combinations(items, r):
        kernel = frozenset(combo[0])
        for other in combo[1:]:
            kernel &= other
        if all(
            (a & b) == kernel for a, b in itertools.combinations(combo, 2)
        ):
            return kernel, combo
    return None


def brute_ore(sets: Iterable[frozenset[int]], n: int, k: int) -> int | None:
    items = set(sets)
    degs = {v: 0 for v in range(1, n + 1)}
    for s in items:
        for v in s:
            degs[v] += 1
    best = None
    for combo in itertools.combinations(range(1, n + 1), k):
        if frozenset(combo) in items:
            continue
        total = sum(degs[v] for v in combo)
        if best is None or total < best:
            best = total
    return best


def brute_upward_closure(
    sets: Iterable[frozenset[int]], n: int, cap: int
) -> set[frozenset[int]]:
    base = list(sets)
    out = set()
    universe = range(1, n + 1)
    for size in range(0, cap + 1):
        for combo in itertools.combinations(universe, size):
            cand = frozenset(combo)
            if any(s <= cand for s in base):
                out.add(cand)
    return out


def brute_m_degree(sets: Iterable[frozenset[int]], v: int, m: int) -> int:
    return sum(1 for s in set(sets) if v in s and len(s) == m)
