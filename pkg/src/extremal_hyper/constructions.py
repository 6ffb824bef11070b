"""Generator families with self-certifying matching numbers and degrees.

Every generator re-validates its claimed certificate (matching number,
degree thresholds) with the exact engines before returning; a failure raises
SelfCheckError and signals an implementation bug, not bad input. Parameter
range violations raise ValueError.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .colexshadow import cover_degree_bound
from .matchcover import matching_number
from .setcore import KSet, SetFamily, degree_sequence, degree_vector


class SelfCheckError(RuntimeError):
    """A generated family failed its own certificate."""


def _interval_mask(lo: int, hi: int) -> int:
    # [lo, hi] as a bit mask; empty when hi < lo
    if hi < lo:
        return 0
    return ((1 << hi) - 1) & ~((1 << (lo - 1)) - 1)


def _kset_masks(n: int, k: int):
    for combo in itertools.combinations(range(n), k):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def construct_Ai(n: int, k: int, s: int, i: int) -> SetFamily:
    """A_i = {F in C([n], k) : |F & [is + i - 1]| >= i}.

    Self-check: matching number equals s whenever n >= sk + k - 1.
    """
    if not 1 <= i <= k:
        raise ValueError(f"need 1 <= i <= k, got i={i}, k={k}")
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    head = i * s + i - 1
    if n < head:
        raise ValueError(f"need n >= {head} for the head window, got {n}")
    hmask = _interval_mask(1, head)
    fam = SetFamily.from_masks(
        n, k, (m for m in _kset_masks(n, k) if (m & hmask).bit_count() >= i))
    if n >= s * k + k - 1:
        nu, _ = matching_number(fam)
        if nu != s:
            raise SelfCheckError(f"A_{i}({n},{k},{s}): nu = {nu}, expected {s}")
    return fam


def _g_first_part(n: int, k: int, s: int) -> list[int]:
    left = _interval_mask(1, s - 1)
    mid = _interval_mask(s, k + 2 * s - 3)
    return [m for m in _kset_masks(n, k) if m & left and m & mid]


def construct_G(n: int, k: int, s: int) -> SetFamily:
    """The two-part family whose (k+2s-3)-th largest degree beats the cover
    bound while the matching number stays at s - 1.

    Part one: members meeting both [s-1] and [s, k+2s-3]. Part two: members
    inside [s, k+2s-3] containing vertex s. Self-check: nu == s - 1 and the
    i-th largest degree exceeds cover_degree_bound(n, k, s) for every
    i <= k + 2s - 3.
    """
    if s < 2 or k < 2:
        raise ValueError(f"need s >= 2 and k >= 2, got s={s}, k={k}")
    head = k + 2 * s - 3
    if n < head + k:
        raise ValueError(f"need n >= {head + k}, got {n}")
    mid = _interval_mask(s, head)
    sbit = 1 << (s - 1)
    part2 = [m for m in _kset_masks(n, k) if m & ~mid == 0 and m & sbit]
    fam = SetFamily.from_masks(n, k, _g_first_part(n, k, s) + part2)
    _check_nu(fam, s - 1, "G")
    bound = cover_degree_bound(n, k, s)
    seq = degree_sequence(fam)
    for t in range(1, head + 1):
        if seq.d(t) <= bound:
            raise SelfCheckError(
                f"G({n},{k},{s}): d_{t} = {seq.d(t)} <= bound {bound}")
    return fam


def construct_H1(n: int, k: int, s: int) -> SetFamily:
    """Variant of G whose tail adds members through [s+1, k+s] plus the
    block [s+1, k+s] itself. Requires s >= 3.

    Self-check: nu < s and the (k+2s-3)-th largest degree exceeds the cover
    bound.
    """
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    head = k + 2 * s - 3
    if n < head + k:
        raise ValueError(f"need n >= {head + k}, got {n}")
    mid = _interval_mask(s, head)
    sbit = 1 << (s - 1)
    window = _interval_mask(s + 1, k + s)
    tail = [m for m in _kset_masks(n, k)
            if m & ~mid == 0 and m & sbit and m & window]
    if window.bit_count() == k:
        tail.append(window)
    fam = SetFamily.from_masks(n, k, _g_first_part(n, k, s) + tail)
    _check_h(fam, n, k, s, "H1")
    return fam


def construct_H2(n: int, k: int, s: int) -> SetFamily:
    """Variant of G whose tail is {H in C([s, k+2s-3], k) : |H & [s, s+2]| >= 2}.

    The tail is intersecting (two members share a vertex of the 3-window by
    pigeonhole) and has positive minimum degree on [s, k+2s-3] for every
    k >= 3, s >= 3. Self-check as for H1.
    """
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    head = k + 2 * s - 3
    if n < head + k:
        raise ValueError(f"need n >= {head + k}, got {n}")
    mid = _interval_mask(s, head)
    window = _interval_mask(s, s + 2)
    tail = [m for m in _kset_masks(n, k)
            if m & ~mid == 0 and (m & window).bit_count() >= 2]
    fam = SetFamily.from_masks(n, k, _g_first_part(n, k, s) + tail)
    _check_h(fam, n, k, s, "H2")
    return fam


def construct_cover_family(n: int, k: int, cover: Iterable[int] | KSet) -> SetFamily:
    """{F in C([n], k) : F meets the cover set}.

    Self-check: every vertex outside the cover has degree exactly
    binom(n-1, k-1) - binom(n-1-|S|, k-1); with |S| = s - 1 that is the
    cover degree bound for s.
    """
    smask = cover.bits if isinstance(cover, KSet) else KSet.from_vertices(cover).bits
    if smask >> n:
        raise ValueError(f"cover set not contained in [{n}]")
    fam = SetFamily.from_masks(
        n, k, (m for m in _kset_masks(n, k) if m & smask))
    expected = cover_degree_bound(n, k, smask.bit_count() + 1)
    degs = degree_vector(fam)
    for v in range(1, n + 1):
        if smask >> (v - 1) & 1:
            continue
        if degs[v - 1] != expected:
            raise SelfCheckError(
                f"cover({n},{k}): degree({v}) = {degs[v - 1]}, expected {expected}")
    return fam


def _check_nu(fam: SetFamily, expected: int, name: str) -> None:
    nu, _ = matching_number(fam)
    if nu != expected:
        raise SelfCheckError(f"{name}: nu = {nu}, expected {expected}")


def _check_h(fam: SetFamily, n: int, k: int, s: int, name: str) -> None:
    nu, _ = matching_number(fam)
    if nu >= s:
        raise SelfCheckError(f"{name}({n},{k},{s}): nu = {nu}, expected < {s}")
    head = k + 2 * s - 3
    bound = cover_degree_bound(n, k, s)
    d_head = degree_sequence(fam).d(head)
    if d_head <= bound:
        raise SelfCheckError(
            f"{name}({n},{k},{s}): d_{head} = {d_head} <= bound {bound}")


def certify(fam: SetFamily, s: int) -> dict[str, int]:
    """Exact certificate payload for CLI emission: nu and headline degrees."""
    nu, _ = matching_number(fam)
    seq = degree_sequence(fam)
    head = fam.k + 2 * s - 3
    out = {"nu": nu, "bound": cover_degree_bound(fam.n, fam.k, s)}
    if 1 <= head <= fam.n:
        out[f"d_{head}"] = seq.d(head)
    return out
