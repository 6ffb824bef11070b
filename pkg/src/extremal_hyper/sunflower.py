"""Delta-systems (sunflowers) and the layered base of a family.

A delta-system with kernel K is a set of members whose pairwise
intersections all equal K exactly. Searching for r petals over a fixed
kernel reduces to an exact matching among the residues F - K, which the
matchcover engine solves with early exit.

The base B_{s,k}(F) adjoins to F every nonempty kernel E admitting a
delta-system of cardinality (sk - k + 1)^|E|; B* keeps only its
inclusion-minimal elements, grouped into layers by size. Thresholds are
exact Python integers, so there is no overflow regime; a threshold larger
than the number of members containing E short-circuits to "absent".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .colexshadow import binom
from .matchcover import find_disjoint_members
from .setcore import Family, KSet, MixedFamily, SetFamily


@dataclass(frozen=True)
class Sunflower:
    kernel: KSet
    petals: tuple[KSet, ...]

    def is_valid_for(self, family: Family) -> bool:
        """Re-validate: petals are distinct members meeting exactly in the kernel."""
        kb = self.kernel.bits
        seen = set()
        for p in self.petals:
            if p.bits in seen or p.bits not in family.member_masks:
                return False
            if p.bits & kb != kb:
                return False
            seen.add(p.bits)
        petals = [p.bits for p in self.petals]
        for i in range(len(petals)):
            for j in range(i + 1, len(petals)):
                if petals[i] & petals[j] != kb:
                    return False
        return True


def find_sunflower_with_kernel(family: Family, kernel: KSet, r: int) -> Sunflower | None:
    """A delta-system of cardinality r with the given kernel, or None.

    Deterministic: petals come from the matching engine's canonical search.
    r <= 0 is trivially satisfied by the empty petal list. A member equal to
    the kernel itself counts as one petal (its residue is empty and disjoint
    from everything).
    """
    if r <= 0:
        return Sunflower(kernel, ())
    kb = kernel.bits
    cands = [m for m in family.masks if m & kb == kb]
    if len(cands) < r:
        return None
    has_self = kb in family.member_masks
    residues = [m ^ kb for m in cands if m != kb]
    need = r - 1 if has_self else r
    petals: list[int] = [kb] if has_self else []
    if need > 0:
        resfam = MixedFamily.from_masks(
            family.n, max(m.bit_count() for m in residues) if residues else 0,
            residues)
        found = find_disjoint_members(resfam, need)
        if found is None:
            return None
        petals.extend(e.bits | kb for e in found.edges)
    return Sunflower(kernel, tuple(KSet(p) for p in sorted(petals)))


def delta_system_exists(family: Family, kernel: KSet, r: int) -> bool:
    return find_sunflower_with_kernel(family, kernel, r) is not None


def _kernel_candidates(family: Family, include_empty: bool) -> list[int]:
    subs: set[int] = {0} if include_empty else set()
    for m in family.masks:
        sub = m
        while sub:
            subs.add(sub)
            sub = (sub - 1) & m
    ordered = sorted(subs, key=lambda x: (x.bit_count(), x))
    return ordered


def find_delta_system(family: Family, r: int) -> Sunflower | None:
    """A delta-system of cardinality r with any kernel (the empty one too).

    The kernel of any delta-system with r >= 2 petals is an intersection of
    two members, so scanning the empty set plus all submasks of members is
    exhaustive. Kernels are tried in (size, colex) order.
    """
    if r <= 0:
        return Sunflower(KSet(0), ())
    if r == 1:
        if not family.masks:
            return None
        first = KSet(family.masks[0])
        return Sunflower(first, (first,))
    for kb in _kernel_candidates(family, include_empty=True):
        found = find_sunflower_with_kernel(family, KSet(kb), r)
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class DeltaBase:
    """Inclusion-minimal base sets of a family, layered by size.

    layers[i-1] holds the size-i base sets in colex order. certificates maps
    each base set that is not itself a member to a sunflower witnessing its
    admission.
    """

    s: int
    k: int
    n: int
    layers: tuple[tuple[KSet, ...], ...]
    certificates: tuple[tuple[KSet, Sunflower], ...]

    def layer(self, i: int) -> tuple[KSet, ...]:
        if not 1 <= i <= self.k:
            raise ValueError(f"layer index {i} not in [1, {self.k}]")
        return self.layers[i - 1]

    def base_sets(self) -> Iterator[KSet]:
        for layer in self.layers:
            yield from layer

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @cached_property
    def base_masks(self) -> frozenset[int]:
        return frozenset(b.bits for layer in self.layers for b in layer)

    def certificate_for(self, base_set: KSet) -> Sunflower | None:
        for ks, sf in self.certificates:
            if ks.bits == base_set.bits:
                return sf
        return None

    def to_mixed_family(self) -> MixedFamily:
        return MixedFamily.from_masks(self.n, self.k, self.base_masks)

    def to_text(self) -> str:
        """Mixed-family file format plus a certificate appendix.

        Certificates are comment lines, so the output re-parses as the plain
        mixed family of base sets.
        """
        text = self.to_mixed_family().to_text()
        lines = [text.rstrip("\n")]
        for ks, sf in self.certificates:
            kern = " ".join(str(v) for v in ks.vertices())
            pets = " ; ".join(" ".join(str(v) for v in p.vertices())
                              for p in sf.petals)
            lines.append(f"# certificate {kern} : {pets}")
        return "\n".join(lines) + "\n"


def delta_base(family: SetFamily, s: int) -> DeltaBase:
    """The layered minimal base B*_{s,k} of a k-uniform family.

    Kernel candidates are the nonempty subsets of members (a kernel must sit
    inside every petal, hence inside some member). Each size-e candidate is
    admitted iff a delta-system of cardinality (sk - k + 1)^e exists; the
    scan runs in (size, colex) order so the result and its certificates are
    deterministic.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    k = family.k
    if k < 2:
        raise ValueError(f"need uniformity k >= 2, got {k}")
    base: set[int] = set(family.member_masks)
    certs: dict[int, Sunflower] = {}
    for kb in _kernel_candidates(family, include_empty=False):
        if kb in base:
            continue
        r = (s * k - k + 1) ** kb.bit_count()
        found = find_sunflower_with_kernel(family, KSet(kb), r)
        if found is not None:
            base.add(kb)
            certs[kb] = found
    minimal: list[int] = []
    for m in sorted(base, key=lambda x: (x.bit_count(), x)):
        if not any(mm & m == mm for mm in minimal):
            minimal.append(m)
    layers: list[tuple[KSet, ...]] = []
    for size in range(1, k + 1):
        layers.append(tuple(KSet(m) for m in sorted(minimal)
                            if m.bit_count() == size))
    certificates = tuple(
        (KSet(m), certs[m])
        for m in sorted(certs, key=lambda x: (x.bit_count(), x))
        if m in set(minimal))
    return DeltaBase(s, k, family.n, tuple(layers), certificates)


def f_bound(s: int, k: int) -> int:
    """Size bound for the minimal base, exactly as displayed:

    f(s, k) = s + sum_{i=1}^{k-1} (i+1)! * ((sk+1)^i - 1)^k
    """
    if s < 2 or k < 2:
        raise ValueError("need s >= 2 and k >= 2")
    total = s
    for i in range(1, k):
        total += math.factorial(i + 1) * ((s * k + 1) ** i - 1) ** k
    return total


def f_bound_derived(s: int, k: int) -> int:
    """Sharper base-size bound obtained by applying the sunflower lemma
    directly to each layer: layer i+1 is (i+1)-uniform and contains no
    delta-system of cardinality (sk - k + 1)^i, hence has fewer than
    (i+1)! * ((sk-k+1)^i - 1)^(i+1) members.
    """
    if s < 2 or k < 2:
        raise ValueError("need s >= 2 and k >= 2")
    total = s
    for i in range(1, k):
        total += math.factorial(i + 1) * ((s * k - k + 1) ** i - 1) ** (i + 1)
    return total


def upp1_size_bound(base: DeltaBase, n: int) -> int:
    """Family size bound: sum_i |B*^(i)| * binom(n - i, k - i)."""
    k = base.k
    total = 0
    for i in range(1, k + 1):
        total += len(base.layer(i)) * binom(n - i, k - i)
    return total


def upp1_degree_bound(base: DeltaBase, n: int, m: int) -> int:
    """Degree bound at vertex m through the layered base.

    Base sets containing m contribute binom(n - i, k - i) each; the rest
    contribute binom(n - i - 1, k - i - 1) each (their supersets through m
    must pick m among the free slots).
    """
    if not 1 <= m <= n:
        raise ValueError(f"vertex {m} out of range [1, {n}]")
    k = base.k
    bit = 1 << (m - 1)
    total = 0
    for i in range(1, k + 1):
        with_m = sum(1 for b in base.layer(i) if b.bits & bit)
        without = len(base.layer(i)) - with_m
        total += with_m * binom(n - i, k - i)
        total += without * binom(n - i - 1, k - i - 1)
    return total
