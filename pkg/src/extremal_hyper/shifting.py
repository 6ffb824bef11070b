"""Compression (shifting) operators, fixpoints, and traces.

The shift S_{i,j} with i < j replaces each member A containing j but not i
by (A - {j}) | {i}, unless that replacement is already a member of the
original family, in which case A stays. A family is ell-shifted when it is
invariant under every S_{i,j} with i in [ell] and j in [ell+1, n]: mass only
moves into the window [ell].

Each effective shift strictly decreases the sum over members of their vertex
sums, so the fixpoint sweep terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .colexshadow import binom
from .setcore import KSet, MixedFamily, SetFamily, m_degree


@dataclass(frozen=True)
class ShiftPair:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got ({self.i}, {self.j})")


def shift(family: SetFamily, pair: ShiftPair) -> SetFamily:
    """Apply S_{i,j} once. Returns the same object when nothing moves.

    Collision checks run against the original family, not the partially
    rewritten one; the map is injective on moved members, so the family size
    is always preserved.
    """
    if pair.j > family.n:
        raise ValueError(f"j={pair.j} outside ground set [{family.n}]")
    ibit = 1 << (pair.i - 1)
    jbit = 1 << (pair.j - 1)
    members = family.member_masks
    out = []
    changed = False
    for m in family.masks:
        if m & jbit and not m & ibit:
            repl = (m ^ jbit) | ibit
            if repl not in members:
                out.append(repl)
                changed = True
                continue
        out.append(m)
    if not changed:
        return family
    return SetFamily.from_masks(family.n, family.k, out)


def shift_steps(family: SetFamily, ell: int) -> Iterator[tuple[ShiftPair, SetFamily]]:
    """Yield every effective shift on the way to the ell-shifted fixpoint.

    Sweep order: j descending from n to ell+1, i ascending over [ell],
    repeated until one full round changes nothing.
    """
    if not 1 <= ell <= family.n:
        raise ValueError(f"ell={ell} out of range [1, {family.n}]")
    current = family
    while True:
        changed = False
        for j in range(family.n, ell, -1):
            for i in range(1, ell + 1):
                pair = ShiftPair(i, j)
                nxt = shift(current, pair)
                if nxt is not current:
                    current = nxt
                    changed = True
                    yield pair, current
        if not changed:
            return


def shift_to_ell(family: SetFamily, ell: int) -> SetFamily:
    """The ell-shifted fixpoint of the family."""
    current = family
    for _, current in shift_steps(family, ell):
        pass
    return current


def is_ell_shifted(family: SetFamily, ell: int) -> bool:
    if not 1 <= ell <= family.n:
        raise ValueError(f"ell={ell} out of range [1, {family.n}]")
    for j in range(ell + 1, family.n + 1):
        for i in range(1, ell + 1):
            if shift(family, ShiftPair(i, j)) is not family:
                return False
    return True


def trace(family: SetFamily, ell: int) -> MixedFamily:
    """The deduplicated trace {A & [ell] : A in family} on ground set [ell].

    The empty set appears whenever some member avoids [ell]; it is kept and
    flagged by the MixedFamily rather than rejected.
    """
    if not 1 <= ell <= family.n:
        raise ValueError(f"ell={ell} out of range [1, {family.n}]")
    emask = (1 << ell) - 1
    return MixedFamily.from_masks(ell, family.k, (m & emask for m in family.masks))


def trace_degree_bound(family: SetFamily, ell: int, v: int) -> int:
    """Upper bound on degree(family, v) decomposed through the trace.

    For v <= ell, every member B containing v has trace A = B & [ell] with
    v in A, and at most binom(n - ell, k - |A|) members share that trace.
    """
    if not 1 <= v <= ell:
        raise ValueError(f"vertex {v} not in [1, {ell}]")
    g = trace(family, ell)
    total = 0
    for m in range(1, family.k + 1):
        total += m_degree(g, v, m) * binom(family.n - ell, family.k - m)
    return total
