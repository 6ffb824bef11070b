"""Exact matching number and vertex cover number engines.

Both solvers are branch and bound over bit-mask member lists: exponential in
the worst case, fast at the n <= 30 scale this package targets. Outputs are
deterministic. Candidate members are always scanned in canonical (colex)
order, branching vertices in increasing order, and an incumbent solution is
replaced only by a strictly better one, so ties resolve toward the
colex-least witness found first.

A family containing the empty set has no sensible matching or cover
semantics (the empty set is disjoint from everything), so every engine here
rejects it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setcore import Family, KSet, MixedFamily, SetFamily


@dataclass(frozen=True)
class MatchingWitness:
    """Pairwise disjoint members realizing a matching."""

    edges: tuple[KSet, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_valid_for(self, family: Family) -> bool:
        used = 0
        for e in self.edges:
            if e.bits not in family.member_masks or e.bits & used:
                return False
            used |= e.bits
        return True


@dataclass(frozen=True)
class CoverWitness:
    """A vertex set meeting every member."""

    vertices: KSet

    @property
    def size(self) -> int:
        return self.vertices.size

    def is_valid_for(self, family: Family) -> bool:
        return all(m & self.vertices.bits for m in family.masks)


def _reject_empty_member(family: Family) -> None:
    if 0 in family.member_masks:
        raise ValueError("family contains the empty set")


def _max_disjoint(masks: list[int], stop_at: int | None = None) -> list[int]:
    """Largest pairwise-disjoint sublist; early exit at stop_at if given.

    Branches on a minimum-degree vertex of the remaining support: either one
    of its members joins the solution, or none does and the vertex drops out.
    Prune: no more than popcount(support) // min-member-size sets can still
    be added.
    """
    # greedy seed in canonical order doubles as the initial incumbent
    best: list[int] = []
    used = 0
    for m in masks:
        if m & used == 0:
            best.append(m)
            used |= m

    def target_reached() -> bool:
        return stop_at is not None and len(best) >= stop_at

    def dfs(avail: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if target_reached() or not avail:
            return
        support = 0
        min_size = 65
        for m in avail:
            support |= m
            c = m.bit_count()
            if c < min_size:
                min_size = c
        if len(chosen) + support.bit_count() // min_size <= len(best):
            return
        # minimum-degree vertex of the support, smallest index on ties
        degs: dict[int, int] = {}
        for m in avail:
            mm = m
            while mm:
                b = mm & -mm
                degs[b] = degs.get(b, 0) + 1
                mm ^= b
        vbit = min(degs, key=lambda b: (degs[b], b))
        for m in avail:
            if m & vbit:
                dfs([a for a in avail if a & m == 0], chosen + [m])
                if target_reached():
                    return
        dfs([a for a in avail if not a & vbit], chosen)

    if not target_reached():
        dfs(list(masks), [])
    return sorted(best)


def matching_number(family: Family) -> tuple[int, MatchingWitness]:
    """Exact matching number with a deterministic witness."""
    _reject_empty_member(family)
    sol = _max_disjoint(list(family.masks))
    return len(sol), MatchingWitness(tuple(KSet(m) for m in sol))


def find_disjoint_members(family: Family, r: int) -> MatchingWitness | None:
    """Some r pairwise disjoint members, or None. Early-exit existence query."""
    if r <= 0:
        return MatchingWitness(())
    _reject_empty_member(family)
    sol = _max_disjoint(list(family.masks), stop_at=r)
    if len(sol) < r:
        return None
    return MatchingWitness(tuple(KSet(m) for m in sol[:r]))


def _greedy_disjoint_count(masks: list[int]) -> int:
    used = 0
    count = 0
    for m in masks:
        if m & used == 0:
            count += 1
            used |= m
    return count


def vertex_cover_number(family: Family) -> tuple[int, CoverWitness]:
    """Exact vertex cover number with a deterministic witness.

    Branches on the vertices of the first uncovered member (at most k ways),
    pruned by the greedy disjoint-member lower bound.
    """
    _reject_empty_member(family)
    masks = list(family.masks)
    if not masks:
        return 0, CoverWitness(KSet(0))
    support = 0
    for m in masks:
        support |= m
    best_mask = support
    best_count = support.bit_count()

    def dfs(remaining: list[int], cover: int, count: int) -> None:
        nonlocal best_mask, best_count
        if not remaining:
            if count < best_count:
                best_count = count
                best_mask = cover
            return
        if count + _greedy_disjoint_count(remaining) >= best_count:
            return
        first = remaining[0]
        mm = first
        while mm:
            b = mm & -mm
            dfs([m for m in remaining if not m & b], cover | b, count + 1)
            mm ^= b

    dfs(masks, 0, 0)
    return best_count, CoverWitness(KSet(best_mask))


def _augment(start: int, adj: dict[int, set[int]], mate: dict[int, int]):
    """Backtracking search for a simple alternating path from a free vertex.

    Exhaustive over simple paths (visited is per path, undone on backtrack),
    so by Berge's theorem the overall loop computes a maximum matching on
    any graph. Worst-case exponential, fine at desk scale.
    """

    def walk(v: int, visited: set[int]):
        for u in sorted(adj[v]):
            if u in visited:
                continue
            if u not in mate:
                return [v, u]
            w = mate[u]
            visited.add(u)
            visited.add(w)
            tail = walk(w, visited)
            if tail is not None:
                return [v, u] + tail
            visited.discard(u)
            visited.discard(w)
        return None

    return walk(start, {start})


def max_matching_graph(family: SetFamily) -> MatchingWitness:
    """Maximum matching of a 2-uniform family via augmenting paths."""
    if family.k != 2:
        raise ValueError("max_matching_graph requires a 2-uniform family")
    adj: dict[int, set[int]] = {}
    for e in family.edges:
        u, v = e.vertices()
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    mate: dict[int, int] = {}
    for r in sorted(adj):
        if r in mate:
            continue
        path = _augment(r, adj, mate)
        if path is None:
            continue
        for a, b in zip(path[0::2], path[1::2]):
            mate[a] = b
            mate[b] = a
    edges = sorted({(1 << (a - 1)) | (1 << (b - 1)) for a, b in mate.items()})
    return MatchingWitness(tuple(KSet(m) for m in edges))


def is_intersecting(family: Family) -> bool:
    """True iff every two members share a vertex."""
    masks = family.masks
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j] == 0:
                return False
    return True
