"""Ground sets, bit-mask subsets, and uniform or mixed set families.

Vertices are 1-based everywhere a caller can see them (files, witnesses,
function arguments). Internally a set is a single Python int where bit v-1
stands for vertex v, so intersection, union and containment are one-word
operations. Ground sets are capped at 64 vertices: the tools in this package
are meant for exact desk-scale work, and the cap keeps every mask a machine
word on CPython.

Families are canonical after construction: members are deduplicated and kept
in colexicographic order (for equal-size sets colex order coincides with the
numeric order of the bit masks), so family equality is plain field equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

MAX_GROUND = 64


class FamilyFormatError(ValueError):
    """A family file violates the format contract."""


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"vertex {v!r} is not a positive integer")
        if v > MAX_GROUND:
            raise ValueError(f"vertex {v} exceeds the {MAX_GROUND}-vertex cap")
        bit = 1 << (v - 1)
        if mask & bit:
            raise ValueError(f"duplicate vertex {v}")
        mask |= bit
    return mask


@dataclass(frozen=True)
class KSet:
    """A subset of the ground set stored as a bit mask (bit v-1 = vertex v)."""

    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("negative bit mask")

    @classmethod
    def of(cls, *vertices: int) -> "KSet":
        return cls(_mask_of(vertices))

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "KSet":
        return cls(_mask_of(vertices))

    @cached_property
    def size(self) -> int:
        return self.bits.bit_count()

    def vertices(self) -> tuple[int, ...]:
        out = []
        m = self.bits
        while m:
            b = m & -m
            out.append(b.bit_length())
            m ^= b
        return tuple(out)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __contains__(self, v: int) -> bool:
        return v >= 1 and (self.bits >> (v - 1)) & 1 == 1

    def issubset(self, other: "KSet") -> bool:
        return self.bits & other.bits == self.bits

    def isdisjoint(self, other: "KSet") -> bool:
        return self.bits & other.bits == 0

    def __and__(self, other: "KSet") -> "KSet":
        return KSet(self.bits & other.bits)

    def __or__(self, other: "KSet") -> "KSet":
        return KSet(self.bits | other.bits)

    def __sub__(self, other: "KSet") -> "KSet":
        return KSet(self.bits & ~other.bits)

    def __repr__(self) -> str:
        return "KSet{%s}" % ",".join(str(v) for v in self.vertices())


def _prepare_masks(sets, n: int) -> list[int]:
    masks = []
    for s in sets:
        if isinstance(s, KSet):
            m = s.bits
        elif isinstance(s, int):
            m = s
            if m < 0:
                raise ValueError("negative bit mask")
        else:
            m = _mask_of(s)
        if m >> n:
            raise ValueError(f"set {KSet(m)!r} not contained in [{n}]")
        masks.append(m)
    return sorted(set(masks))


@dataclass(frozen=True)
class SetFamily:
    """A k-uniform family over [n]. `edges` is deduplicated, in colex order."""

    n: int
    k: int
    edges: tuple[KSet, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} not in [1, {MAX_GROUND}]")
        if not 0 <= self.k <= MAX_GROUND:
            raise ValueError(f"uniformity {self.k} not in [0, {MAX_GROUND}]")
        prev = -1
        for e in self.edges:
            if e.bits >> self.n:
                raise ValueError(f"edge {e!r} not contained in [{self.n}]")
            if e.size != self.k:
                raise ValueError(f"edge {e!r} has size {e.size}, expected {self.k}")
            if e.bits <= prev:
                raise ValueError("edges not in strictly ascending colex order")
            prev = e.bits

    @classmethod
    def of(cls, n: int, k: int, sets: Iterable) -> "SetFamily":
        return cls(n, k, tuple(KSet(m) for m in _prepare_masks(sets, n)))

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "SetFamily":
        return cls(n, k, tuple(KSet(m) for m in sorted(set(masks))))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(e.bits for e in self.edges)

    @cached_property
    def member_masks(self) -> frozenset[int]:
        return frozenset(self.masks)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.edges)

    def __contains__(self, item) -> bool:
        if isinstance(item, KSet):
            return item.bits in self.member_masks
        if isinstance(item, int):
            return item in self.member_masks
        return _mask_of(item) in self.member_masks

    def to_text(self) -> str:
        return _render_family(self.n, self.k, self.masks)


@dataclass(frozen=True)
class MixedFamily:
    """A family of sets of size <= cap over [n], such as a trace.

    `sets` is deduplicated and sorted by (size, colex). The empty set is a
    legal member; it is flagged via `has_empty` rather than rejected, since
    traces produce it naturally. Matching and cover engines refuse it.
    """

    n: int
    cap: int
    sets: tuple[KSet, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} not in [1, {MAX_GROUND}]")
        if not 0 <= self.cap <= MAX_GROUND:
            raise ValueError(f"cap {self.cap} not in [0, {MAX_GROUND}]")
        prev = None
        for s in self.sets:
            if s.bits >> self.n:
                raise ValueError(f"set {s!r} not contained in [{self.n}]")
            if s.size > self.cap:
                raise ValueError(f"set {s!r} larger than cap {self.cap}")
            key = (s.size, s.bits)
            if prev is not None and key <= prev:
                raise ValueError("sets not in canonical (size, colex) order")
            prev = key

    @classmethod
    def of(cls, n: int, cap: int, sets: Iterable) -> "MixedFamily":
        masks = _prepare_masks(sets, n)
        masks.sort(key=lambda m: (m.bit_count(), m))
        return cls(n, cap, tuple(KSet(m) for m in masks))

    @classmethod
    def from_masks(cls, n: int, cap: int, masks: Iterable[int]) -> "MixedFamily":
        uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
        return cls(n, cap, tuple(KSet(m) for m in uniq))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(s.bits for s in self.sets)

    @cached_property
    def member_masks(self) -> frozenset[int]:
        return frozenset(self.masks)

    @property
    def has_empty(self) -> bool:
        return 0 in self.member_masks

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.sets)

    def __contains__(self, item) -> bool:
        if isinstance(item, KSet):
            return item.bits in self.member_masks
        if isinstance(item, int):
            return item in self.member_masks
        return _mask_of(item) in self.member_masks

    def to_text(self) -> str:
        return _render_family(self.n, 0, self.masks)


Family = Union[SetFamily, MixedFamily]


@dataclass(frozen=True)
class DegreeSequence:
    """All n vertex degrees, sorted non-increasingly, zeros included."""

    values: tuple[int, ...]

    def d(self, t: int) -> int:
        """The t-th largest degree, 1-based."""
        if not 1 <= t <= len(self.values):
            raise ValueError(f"index {t} not in [1, {len(self.values)}]")
        return self.values[t - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


# --- file format ------------------------------------------------------------
#
# line 1:  "n k"   (k = 0 declares a mixed family)
# then one set per line, ascending 1-based vertices, space separated.
# '#' starts a comment, blank lines are skipped, CRLF input is accepted,
# output always uses LF. The empty set has no representation in this format,
# so serialization refuses families that contain it.


def parse_family(text: str) -> Family:
    """Parse the family file format, returning SetFamily or MixedFamily.

    The uniform variant is returned iff the header declares k >= 1; every
    set line must then have exactly k vertices. A mixed family takes its cap
    from the largest set present.
    """
    header = None
    masks: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise FamilyFormatError(f"line {lineno}: malformed line {raw!r}") from exc
        if header is None:
            if len(values) != 2:
                raise FamilyFormatError(f"line {lineno}: header must be 'n k'")
            n, k = values
            if not 1 <= n <= MAX_GROUND:
                raise FamilyFormatError(
                    f"line {lineno}: ground size {n} not in [1, {MAX_GROUND}]")
            if not 0 <= k <= n:
                raise FamilyFormatError(f"line {lineno}: k={k} not in [0, {n}]")
            header = (n, k)
            continue
        n, k = header
        mask = 0
        prev = 0
        for v in values:
            if not 1 <= v <= n:
                raise FamilyFormatError(
                    f"line {lineno}: vertex {v} out of range [1, {n}]")
            if v == prev:
                raise FamilyFormatError(f"line {lineno}: duplicate vertex {v}")
            if v < prev:
                raise FamilyFormatError(f"line {lineno}: vertices not ascending")
            mask |= 1 << (v - 1)
            prev = v
        if k > 0 and len(values) != k:
            raise FamilyFormatError(
                f"line {lineno}: set size {len(values)} does not match k={k}")
        masks.append(mask)
    if header is None:
        raise FamilyFormatError("missing 'n k' header line")
    n, k = header
    if k == 0:
        cap = max((m.bit_count() for m in masks), default=0)
        return MixedFamily.from_masks(n, cap, masks)
    return SetFamily.from_masks(n, k, masks)


def _render_family(n: int, k_header: int, masks: Iterable[int]) -> str:
    lines = [f"{n} {k_header}"]
    for m in masks:
        if m == 0:
            raise ValueError("the empty set has no file representation")
        lines.append(" ".join(str(v) for v in KSet(m).vertices()))
    return "\n".join(lines) + "\n"


def serialize_family(family: Family) -> str:
    return family.to_text()


# --- degrees ----------------------------------------------------------------


def degree(family: Family, v: int) -> int:
    """Number of members containing vertex v."""
    if not 1 <= v <= family.n:
        raise ValueError(f"vertex {v} out of range [1, {family.n}]")
    bit = 1 << (v - 1)
    return sum(1 for m in family.masks if m & bit)


def degree_vector(family: Family) -> tuple[int, ...]:
    """Per-vertex degrees indexed by vertex (position v-1 holds deg(v))."""
    degs = [0] * family.n
    for m in family.masks:
        mm = m
        while mm:
            b = mm & -mm
            degs[b.bit_length() - 1] += 1
            mm ^= b
    return tuple(degs)


def degree_sequence(family: Family) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(degree_vector(family), reverse=True)))


def m_degree(family: MixedFamily, v: int, m: int) -> int:
    """Number of size-m members containing vertex v."""
    if not 1 <= v <= family.n:
        raise ValueError(f"vertex {v} out of range [1, {family.n}]")
    if not 1 <= m <= family.cap:
        raise ValueError(f"size {m} out of range [1, {family.cap}]")
    bit = 1 << (v - 1)
    return sum(1 for s in family.masks if s & bit and s.bit_count() == m)


def ore_degree(family: SetFamily) -> int | None:
    """Minimum degree sum over k-subsets that are not members.

    Returns None when the family is complete (no non-member k-subset
    exists). Runs over all C(n, k) candidates, so desk scale only.
    """
    degs = degree_vector(family)
    members = family.member_masks
    best = None
    for combo in itertools.combinations(range(family.n), family.k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if mask in members:
            continue
        total = sum(degs[v] for v in combo)
        if best is None or total < best:
            best = total
    return best


# --- upward closure ---------------------------------------------------------


def upward_closure(family: MixedFamily) -> MixedFamily:
    """All supersets (within [n], size <= cap) of members of the family."""
    n, cap = family.n, family.cap
    closed = set(family.masks)
    frontier = list(closed)
    while frontier:
        nxt = []
        for m in frontier:
            if m.bit_count() >= cap:
                continue
            absent = ((1 << n) - 1) & ~m
            while absent:
                b = absent & -absent
                grown = m | b
                if grown not in closed:
                    closed.add(grown)
                    nxt.append(grown)
                absent ^= b
        frontier = nxt
    return MixedFamily.from_masks(n, cap, closed)


def is_upward_closed(family: MixedFamily, ell: int, k: int) -> bool:
    """True iff family is upward closed among subsets of [ell] of size <= k.

    Every member must already lie inside [ell]. Checking one-element
    extensions suffices: closure for larger supersets follows by induction.
    """
    if not 1 <= ell <= family.n:
        raise ValueError(f"ell={ell} out of range [1, {family.n}]")
    ell_mask = (1 << ell) - 1
    members = family.member_masks
    for m in family.masks:
        if m & ~ell_mask:
            raise ValueError(f"set {KSet(m)!r} not contained in [{ell}]")
    for m in family.masks:
        if m.bit_count() >= k:
            continue
        free = ell_mask & ~m
        while free:
            b = free & -free
            if (m | b) not in members:
                return False
            free ^= b
    return True
