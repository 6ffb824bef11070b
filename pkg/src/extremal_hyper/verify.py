"""Verification harness: exhaustive small-scale scans, structured and
sampled checks, and seeded hill-climb search for extremal families.

Every entry point returns a VerificationReport. Verdicts:

  holds           every checked instance satisfied the inequality
  counterexample  a witness violating an exact statement was found
  inconclusive    nothing decisive: a sampled/hill-climb budget ran out, or
                  a bound failed at a fixed n for a statement that is only
                  claimed for sufficiently large n

A holds verdict under the exhaustive strategy is a proof for that parameter
point. Reports never claim a refutation of an asymptotic statement from a
small-n violation; such outcomes are labeled inconclusive with the n
recorded.

Determinism: identical (parameters, seed, budget) give byte-identical
serialized reports for any worker count. Per-trial seeds derive as
seed + trial index, trials are pure, and aggregation scans results in
trial order. Wall time is kept on the report object but never serialized.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from .colexshadow import binom, colex_initial_segment, cover_degree_bound
from .constructions import (construct_G, construct_H1, construct_H2,
                            construct_cover_family)
from .matchcover import (find_disjoint_members, matching_number,
                         max_matching_graph, vertex_cover_number)
from .setcore import (Family, MixedFamily, SetFamily, degree_sequence,
                      degree_vector, is_upward_closed, m_degree, ore_degree)
from .shifting import is_ell_shifted, shift_to_ell, trace
from .sunflower import (delta_base, f_bound, f_bound_derived,
                        find_delta_system, upp1_degree_bound, upp1_size_bound)

REPORT_VERSION = "1"

SAMPLER_MODES = (
    "random-maximal-nu",
    "subfamily-of-cover",
    "subfamily-of-star-triangle",
    "shifted-random",
    "mixed-mode",
)


@dataclass(frozen=True)
class CheckBlock:
    """One named sub-check inside a report.

    verdict is "holds", "fails", or "vacuous"; details are (key, value)
    pairs rendered in order.
    """

    name: str
    verdict: str
    details: tuple = ()


@dataclass
class VerificationReport:
    target: str
    strategy: str
    parameters: tuple
    instances_checked: int
    verdict: str
    seed: int | None = None
    budget: int | None = None
    witness: Family | None = None
    witness_inequality: tuple | None = None  # (description, lhs, rhs)
    notes: tuple = ()
    checks: tuple = ()
    elapsed: float = field(default=0.0, compare=False)

    def to_text(self) -> str:
        lines = ["report_version: " + REPORT_VERSION,
                 "target: " + self.target,
                 "strategy: " + self.strategy]
        for key, value in self.parameters:
            lines.append(f"{key}: {value}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        if self.budget is not None:
            lines.append(f"budget: {self.budget}")
        lines.append(f"instances_checked: {self.instances_checked}")
        lines.append("verdict: " + self.verdict)
        for note in self.notes:
            lines.append("note: " + note)
        if self.witness is not None:
            lines.append("witness:")
            for row in _family_rows(self.witness):
                lines.append("  " + row)
        if self.witness_inequality is not None:
            desc, lhs, rhs = self.witness_inequality
            lines.append(f"witness_inequality: {desc}")
            lines.append(f"  lhs: {lhs}")
            lines.append(f"  rhs: {rhs}")
        for block in self.checks:
            lines.append(f"check: {block.name}")
            lines.append(f"  verdict: {block.verdict}")
            for key, value in block.details:
                lines.append(f"  {key}: {value}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "report_version": REPORT_VERSION,
            "target": self.target,
            "strategy": self.strategy,
            "parameters": {key: value for key, value in self.parameters},
            "instances_checked": self.instances_checked,
            "verdict": self.verdict,
            "notes": list(self.notes),
            "checks": [
                {"name": b.name, "verdict": b.verdict,
                 "details": {key: value for key, value in b.details}}
                for b in self.checks
            ],
        }
        if self.seed is not None:
            payload["seed"] = self.seed
        if self.budget is not None:
            payload["budget"] = self.budget
        if self.witness is not None:
            payload["witness"] = {
                "ground": self.witness.n,
                "uniform" if isinstance(self.witness, SetFamily) else "cap":
                    self.witness.k if isinstance(self.witness, SetFamily)
                    else self.witness.cap,
                "sets": _family_rows(self.witness),
            }
        if self.witness_inequality is not None:
            desc, lhs, rhs = self.witness_inequality
            payload["witness_inequality"] = {
                "description": desc, "lhs": lhs, "rhs": rhs}
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _family_rows(family: Family) -> list:
    rows = []
    for member in family:
        if member.bits == 0:
            rows.append("(empty set)")
        else:
            rows.append(" ".join(str(v) for v in member.vertices()))
    return rows


def _params(*pairs) -> tuple:
    return tuple(pairs)


# ---------------------------------------------------------------------------
# sampling


@dataclass(frozen=True)
class FamilySampler:
    """Deterministic generator of families with matching number below s.

    Trial i draws from random.Random(seed + i), so a sample set is
    reproducible regardless of evaluation order or worker count. Every
    produced family is rechecked with the exact matching engine; a sampler
    bug surfaces as RuntimeError rather than a bogus verdict.

    Modes:
      random-maximal-nu            greedily add random k-sets, keeping the
                                   matching number below s, until maximal
      subfamily-of-cover           random subfamily of the family of k-sets
                                   meeting a fixed (s-1)-set
      subfamily-of-star-triangle   k=2 only: random subgraph of a star or
                                   a triangle
      shifted-random               random-maximal-nu pushed to its shift
                                   fixpoint on [ell]
      mixed-mode                   alternates the above by trial parity

    With mixed_sizes=True (random-maximal-nu only) the pool also carries
    sets of every size from 1 to k, yielding MixedFamily samples.
    """

    mode: str
    n: int
    k: int
    s: int
    seed: int
    mixed_sizes: bool = False
    ell: int | None = None

    def __post_init__(self):
        if self.mode not in SAMPLER_MODES:
            raise ValueError(f"unknown sampler mode {self.mode!r}")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")
        if self.s < 1:
            raise ValueError("need s >= 1")
        if self.mode == "subfamily-of-star-triangle" and self.k != 2:
            raise ValueError("star/triangle sampling needs k = 2")
        if self.mixed_sizes and self.mode != "random-maximal-nu":
            raise ValueError("mixed_sizes only applies to random-maximal-nu")
        if self.ell is not None and not 1 <= self.ell <= self.n:
            raise ValueError("ell out of range")

    def family(self, index: int) -> Family:
        rng = random.Random(self.seed + index)
        mode = self.mode
        if mode == "mixed-mode":
            if self.k == 2:
                mode = ("subfamily-of-star-triangle" if index % 2 == 0
                        else "random-maximal-nu")
            else:
                mode = ("random-maximal-nu" if index % 2 == 0
                        else "subfamily-of-cover")
        if mode == "random-maximal-nu":
            fam = self._random_maximal(rng)
        elif mode == "subfamily-of-cover":
            fam = self._sub_cover(rng)
        elif mode == "subfamily-of-star-triangle":
            fam = self._sub_star_triangle(rng)
        else:
            fam = self._shifted(rng)
        self._recheck(fam)
        return fam

    # pools -----------------------------------------------------------

    def _pool(self, size: int) -> list:
        return list(colex_initial_segment(self.n, size,
                                          binom(self.n, size)).masks)

    def _random_maximal(self, rng) -> Family:
        sizes = range(1, self.k + 1) if self.mixed_sizes else (self.k,)
        pool = []
        for size in sizes:
            pool.extend(self._pool(size))
        rng.shuffle(pool)
        chosen: list = []
        for mask in pool:
            if any(c == mask for c in chosen):
                continue
            if self._keeps_small(chosen, mask):
                chosen.append(mask)
        if self.mixed_sizes:
            return MixedFamily.from_masks(self.n, self.k, chosen)
        return SetFamily.from_masks(self.n, self.k, chosen)

    def _keeps_small(self, chosen: list, mask: int) -> bool:
        """Would chosen + [mask] still have matching number < s?"""
        disjoint = [c for c in chosen if c & mask == 0]
        if self.s == 1:
            return False
        if self.s == 2:
            return not disjoint
        if len(disjoint) < self.s - 1:
            return True
        fam = MixedFamily.from_masks(self.n, self.k, disjoint)
        return find_disjoint_members(fam, self.s - 1) is None

    def _sub_cover(self, rng) -> SetFamily:
        head = list(range(1, self.s))
        if head:
            cover = construct_cover_family(self.n, self.k, head)
            base = list(cover.masks)
        else:
            base = []
        keep = [m for m in base if rng.random() < 0.5]
        return SetFamily.from_masks(self.n, self.k, keep)

    def _sub_star_triangle(self, rng) -> SetFamily:
        if rng.random() < 0.5 or self.n < 3:
            center = rng.randrange(1, self.n + 1)
            cbit = 1 << (center - 1)
            base = [cbit | (1 << (u - 1))
                    for u in range(1, self.n + 1) if u != center]
        else:
            a, b, c = sorted(rng.sample(range(self.n), 3))
            base = [(1 << a) | (1 << b), (1 << a) | (1 << c),
                    (1 << b) | (1 << c)]
        keep = [m for m in base if rng.random() < 0.7]
        return SetFamily.from_masks(self.n, 2, keep)

    def _shifted(self, rng) -> SetFamily:
        fam = self._random_maximal(rng)
        ell = self.ell if self.ell is not None else min(self.s * self.k, self.n)
        return shift_to_ell(fam, ell)

    def _recheck(self, fam: Family) -> None:
        if len(fam) == 0:
            return
        nu, _ = matching_number(fam)
        if nu >= self.s:
            raise RuntimeError(
                f"sampler produced a family with matching number {nu} >= "
                f"{self.s}; this is a bug in the sampler")


def _map_trials(fn, count: int, threads: int) -> list:
    """Evaluate fn(0..count-1), in order, optionally on a thread pool."""
    if threads <= 1 or count <= 1:
        return [fn(i) for i in range(count)]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(count)))


# ---------------------------------------------------------------------------
# structured enumeration for k = 2, s = 2

def _maximal_star_triangle(n: int):
    """All maximal intersecting graph families on [n]: full stars and
    triangles. Every intersecting graph family extends to one of these,
    and degrees only grow under extension."""
    for center in range(1, n + 1):
        cbit = 1 << (center - 1)
        yield SetFamily.from_masks(
            n, 2, [cbit | (1 << (u - 1))
                   for u in range(1, n + 1) if u != center])
    for a, b, c in itertools.combinations(range(n), 3):
        yield SetFamily.from_masks(
            n, 2, [(1 << a) | (1 << b), (1 << a) | (1 << c),
                   (1 << b) | (1 << c)])


# ---------------------------------------------------------------------------
# degree bound for the t-th largest degree


def verify_thm_main(n: int, k: int, s: int, sampler: FamilySampler | None = None,
                    budget: int = 200, threads: int = 1) -> VerificationReport:
    """Check: every k-uniform family on [n] with matching number below s
    has (2sk+1)-th largest degree at most
    binom(n-1, k-1) - binom(n-s, k-1), provided n > 2sk.

    For k = s = 2 the check is exhaustive through the star/triangle
    structure of intersecting graph families; otherwise it samples.
    """
    if k < 2 or s < 2:
        raise ValueError("need k >= 2 and s >= 2")
    if n <= 2 * s * k:
        raise ValueError("statement requires n > 2sk")
    start = time.perf_counter()
    t = 2 * s * k + 1
    bound = cover_degree_bound(n, k, s)
    params = _params(("n", n), ("k", k), ("s", s),
                     ("degree_index", t), ("bound", bound))

    if k == 2 and s == 2:
        instances = 0
        for fam in _maximal_star_triangle(n):
            instances += 1
            if degree_sequence(fam).d(t) > bound:
                return VerificationReport(
                    target="thm-main", strategy="exhaustive",
                    parameters=params, instances_checked=instances,
                    verdict="counterexample", witness=fam,
                    witness_inequality=(f"d_{t} <= {bound}",
                                        degree_sequence(fam).d(t), bound),
                    elapsed=time.perf_counter() - start)
        return VerificationReport(
            target="thm-main", strategy="exhaustive", parameters=params,
            instances_checked=instances, verdict="holds",
            notes=("maximal intersecting graph families are full stars and "
                   "triangles; degrees are monotone under extension, so "
                   "these decide the bound",),
            elapsed=time.perf_counter() - start)

    if sampler is None:
        raise ValueError("a sampler is required when k > 2 or s > 2")
    _check_sampler(sampler, n, k, s)

    def trial(i: int):
        fam = sampler.family(i)
        d = degree_sequence(fam).d(t)
        if d > bound:
            return fam, d
        return None

    results = _map_trials(trial, budget, threads)
    for hit in results:
        if hit is not None:
            fam, d = hit
            return VerificationReport(
                target="thm-main", strategy="sampled", parameters=params,
                instances_checked=budget, verdict="counterexample",
                seed=sampler.seed, budget=budget, witness=fam,
                witness_inequality=(f"d_{t} <= {bound}", d, bound),
                elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="thm-main", strategy="sampled", parameters=params,
        instances_checked=budget, verdict="holds",
        seed=sampler.seed, budget=budget,
        notes=("sampled evidence only; the statement is exact for "
               "n > 2sk but this run is not a proof",),
        elapsed=time.perf_counter() - start)


def verify_thm_main2(n: int, k: int, s: int,
                     sampler: FamilySampler | None = None,
                     budget: int = 200, threads: int = 1,
                     index: int | None = None) -> VerificationReport:
    """Check the large-n degree bound at a chosen order statistic.

    With index = k + 2s - 2 (the default) the bound
    d_index <= binom(n-1,k-1) - binom(n-s,k-1) is expected to hold for
    large n. With index = k + 2s - 3 it is expected to FAIL: the designed
    tight family exceeds the bound there, and the report verdict is
    counterexample with that witness.
    """
    if k < 2 or s < 2:
        raise ValueError("need k >= 2 and s >= 2")
    if index is None:
        index = k + 2 * s - 2
    if not 1 <= index <= n:
        raise ValueError("degree index out of range")
    start = time.perf_counter()
    bound = cover_degree_bound(n, k, s)
    params = _params(("n", n), ("k", k), ("s", s),
                     ("degree_index", index), ("bound", bound))
    notes: list = []

    tight = None
    if index == k + 2 * s - 3 and n >= 2 * k + 2 * s - 3:
        fam = construct_G(n, k, s)
        d = degree_sequence(fam).d(index)
        if d > bound:
            tight = (fam, d)

    violation = None
    if k == 2 and s == 2:
        strategy = "exhaustive"
        instances = 0
        for fam in _maximal_star_triangle(n):
            instances += 1
            d = degree_sequence(fam).d(index)
            if d > bound:
                violation = (fam, d)
                break
    elif sampler is not None:
        _check_sampler(sampler, n, k, s)
        strategy = "sampled"
        instances = budget

        def trial(i: int):
            fam = sampler.family(i)
            d = degree_sequence(fam).d(index)
            if d > bound:
                return fam, d
            return None

        for hit in _map_trials(trial, budget, threads):
            if hit is not None:
                violation = hit
                break
    else:
        strategy = "structured"
        instances = 0
        if tight is None:
            raise ValueError("a sampler is required when k > 2 or s > 2 "
                             "and no tightness construction applies")

    if tight is not None:
        instances += 1
        fam, d = tight
        notes.append("expected failure: the tight construction exceeds the "
                     "bound at index k+2s-3, showing k+2s-2 is the best "
                     "possible order statistic")
        return VerificationReport(
            target="thm-main2", strategy=strategy, parameters=params,
            instances_checked=instances, verdict="counterexample",
            seed=sampler.seed if sampler is not None else None,
            budget=budget if strategy == "sampled" else None,
            witness=fam,
            witness_inequality=(f"d_{index} <= {bound}", d, bound),
            notes=tuple(notes),
            elapsed=time.perf_counter() - start)

    if violation is not None:
        fam, d = violation
        notes.append(f"bound exceeded at n = {n}; the statement is "
                     "asymptotic in n, so this is not a refutation")
        return VerificationReport(
            target="thm-main2", strategy=strategy, parameters=params,
            instances_checked=instances, verdict="inconclusive",
            seed=sampler.seed if sampler is not None else None,
            budget=budget if strategy == "sampled" else None,
            witness=fam,
            witness_inequality=(f"d_{index} <= {bound}", d, bound),
            notes=tuple(notes),
            elapsed=time.perf_counter() - start)

    notes.append(f"verified at n = {n}; the statement is asymptotic in n")
    return VerificationReport(
        target="thm-main2", strategy=strategy, parameters=params,
        instances_checked=instances, verdict="holds",
        seed=sampler.seed if sampler is not None else None,
        budget=budget if strategy == "sampled" else None,
        notes=tuple(notes),
        elapsed=time.perf_counter() - start)


def verify_cor_ore(n: int, k: int, s: int,
                   sampler: FamilySampler | None = None,
                   budget: int = 200, threads: int = 1) -> VerificationReport:
    """Check: for n >= 3sk, a k-uniform family on [n] with matching number
    below s has minimum Ore degree at most
    k * (binom(n-1,k-1) - binom(n-s,k-1)).

    Families without a non-member k-set have no Ore degree and are skipped
    with a note. For k = s = 2 a structural pass over maximal intersecting
    graph families runs in addition to any sampling.
    """
    if k < 2 or s < 2:
        raise ValueError("need k >= 2 and s >= 2")
    if n < 3 * s * k:
        raise ValueError("statement requires n >= 3sk")
    start = time.perf_counter()
    sigma_bound = k * cover_degree_bound(n, k, s)
    params = _params(("n", n), ("k", k), ("s", s),
                     ("sigma_bound", sigma_bound))
    notes: list = []
    instances = 0
    skipped = 0
    violation = None

    strategy = "sampled" if sampler is not None else "structured"
    if k == 2 and s == 2:
        if sampler is None:
            strategy = "structured"
        for fam in _maximal_star_triangle(n):
            instances += 1
            sigma = ore_degree(fam)
            if sigma is None:
                skipped += 1
            elif sigma > sigma_bound:
                violation = (fam, sigma)
                break
        if violation is None:
            notes.append("structural pass: all maximal intersecting graph "
                         "families on [n] satisfy the bound")

    if violation is None and sampler is not None:
        _check_sampler(sampler, n, k, s)

        def trial(i: int):
            fam = sampler.family(i)
            sigma = ore_degree(fam)
            if sigma is None:
                return "skip"
            if sigma > sigma_bound:
                return fam, sigma
            return None

        results = _map_trials(trial, budget, threads)
        instances += budget
        for hit in results:
            if hit == "skip":
                skipped += 1
            elif hit is not None:
                violation = hit
                break

    if skipped:
        notes.append(f"{skipped} instance(s) had no non-member k-set and "
                     "no Ore degree; skipped")

    if violation is not None:
        fam, sigma = violation
        return VerificationReport(
            target="cor-ore", strategy=strategy, parameters=params,
            instances_checked=instances, verdict="counterexample",
            seed=sampler.seed if sampler is not None else None,
            budget=budget if sampler is not None else None,
            witness=fam,
            witness_inequality=(f"sigma_k <= {sigma_bound}", sigma,
                                sigma_bound),
            notes=tuple(notes),
            elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="cor-ore", strategy=strategy, parameters=params,
        instances_checked=instances, verdict="holds",
        seed=sampler.seed if sampler is not None else None,
        budget=budget if sampler is not None else None,
        notes=tuple(notes),
        elapsed=time.perf_counter() - start)


def _check_sampler(sampler: FamilySampler, n: int, k: int, s: int) -> None:
    if (sampler.n, sampler.k, sampler.s) != (n, k, s):
        raise ValueError("sampler parameters do not match the target")


# ---------------------------------------------------------------------------
# shift traces


def verify_lemma_ellshift(family: SetFamily, ell: int, s: int) -> VerificationReport:
    """Check the two trace properties of a shift-stable family.

    (1) The trace on [ell] (cap k) is upward closed within [ell].
    (2) If ell >= sk and the family has matching number below s, so does
        the trace.

    If the input is not shift-stable on [ell], its fixpoint is taken first
    and a note records that.
    """
    if s < 1:
        raise ValueError("need s >= 1")
    start = time.perf_counter()
    n, k = family.n, family.k
    notes: list = []
    stable = is_ell_shifted(family, ell)
    if not stable:
        family = shift_to_ell(family, ell)
        notes.append("input was not shift-stable on [ell]; its fixpoint "
                     "was taken first")
    tr = trace(family, ell)
    params = _params(("n", n), ("k", k), ("s", s), ("ell", ell),
                     ("family_size", len(family)), ("trace_size", len(tr)))

    checks: list = []
    ok1 = is_upward_closed(tr, ell, k)
    checks.append(CheckBlock(
        name="trace-upward-closed",
        verdict="holds" if ok1 else "fails",
        details=(("trace_size", len(tr)),)))

    ok2 = True
    if len(family) == 0:
        checks.append(CheckBlock(
            name="trace-matching", verdict="vacuous",
            details=(("reason", "empty family"),)))
    else:
        nu_f, _ = matching_number(family)
        if ell >= s * k and nu_f < s:
            if tr.has_empty:
                # a member avoiding [ell] put the empty set in the trace;
                # under ell >= sk and nu < s that cannot happen, so count
                # it as a failure rather than erroring out
                ok2 = False
                checks.append(CheckBlock(
                    name="trace-matching", verdict="fails",
                    details=(("reason", "empty set appears in the trace"),)))
            else:
                nu_t, _ = matching_number(tr)
                ok2 = nu_t < s
                checks.append(CheckBlock(
                    name="trace-matching",
                    verdict="holds" if ok2 else "fails",
                    details=(("nu_family", nu_f), ("nu_trace", nu_t))))
        else:
            reason = ("ell < s*k" if ell < s * k
                      else f"matching number {nu_f} >= s")
            checks.append(CheckBlock(
                name="trace-matching", verdict="vacuous",
                details=(("reason", reason),)))

    holds = ok1 and ok2
    return VerificationReport(
        target="lemma-ellshift", strategy="structured", parameters=params,
        instances_checked=1,
        verdict="holds" if holds else "counterexample",
        witness=None if holds else tr,
        notes=tuple(notes), checks=tuple(checks),
        elapsed=time.perf_counter() - start)


def verify_lemma_ellshift_sampled(n: int, k: int, s: int, ell: int,
                                  sampler: FamilySampler, budget: int = 200,
                                  threads: int = 1) -> VerificationReport:
    """Run the trace checks over sampled families."""
    _check_sampler(sampler, n, k, s)
    start = time.perf_counter()

    def trial(i: int):
        fam = sampler.family(i)
        rep = verify_lemma_ellshift(fam, ell, s)
        if rep.verdict != "holds":
            return fam, rep
        return None

    results = _map_trials(trial, budget, threads)
    params = _params(("n", n), ("k", k), ("s", s), ("ell", ell))
    for hit in results:
        if hit is not None:
            fam, rep = hit
            return VerificationReport(
                target="lemma-ellshift", strategy="sampled",
                parameters=params, instances_checked=budget,
                verdict="counterexample", seed=sampler.seed, budget=budget,
                witness=fam, checks=rep.checks,
                elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="lemma-ellshift", strategy="sampled", parameters=params,
        instances_checked=budget, verdict="holds",
        seed=sampler.seed, budget=budget,
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# multi-size degree lemma


def verify_lemma_mdeg(n: int, k: int, s: int, sampler: FamilySampler,
                      budget: int = 200, threads: int = 1) -> VerificationReport:
    """Check: for n > 2sk, a family of sets of sizes <= k on [n] with
    matching number below s has a vertex i whose m-degree is at most
    binom(n-1,m-1) - binom(n-s,m-1) for every m in 1..k simultaneously.
    """
    if n <= 2 * s * k:
        raise ValueError("statement requires n > 2sk")
    if not sampler.mixed_sizes:
        raise ValueError("this check needs a mixed-size sampler "
                         "(mixed_sizes=True)")
    _check_sampler(sampler, n, k, s)
    start = time.perf_counter()
    bounds = [binom(n - 1, m - 1) - binom(n - s, m - 1)
              for m in range(1, k + 1)]
    params = _params(("n", n), ("k", k), ("s", s),
                     ("bounds", " ".join(str(b) for b in bounds)))

    def trial(i: int):
        fam = sampler.family(i)
        best_excess = None
        for v in range(1, n + 1):
            excess = 0
            for m in range(1, k + 1):
                over = m_degree(fam, v, m) - bounds[m - 1]
                if over > excess:
                    excess = over
            if excess == 0:
                return None
            if best_excess is None or excess < best_excess:
                best_excess = excess
        return fam, best_excess

    results = _map_trials(trial, budget, threads)
    for hit in results:
        if hit is not None:
            fam, excess = hit
            return VerificationReport(
                target="lemma-mdeg", strategy="sampled", parameters=params,
                instances_checked=budget, verdict="counterexample",
                seed=sampler.seed, budget=budget, witness=fam,
                witness_inequality=(
                    "min over vertices of max m-degree excess <= 0",
                    excess, 0),
                elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="lemma-mdeg", strategy="sampled", parameters=params,
        instances_checked=budget, verdict="holds",
        seed=sampler.seed, budget=budget,
        notes=("each sampled family had a vertex obeying all m-degree "
               "bounds simultaneously",),
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# base-family lemmas


def verify_base_lemmas(family: SetFamily, s: int) -> VerificationReport:
    """Check every property promised for the base family of a family with
    matching number below s: coverage, minimality, branching certificates,
    the two size/degree upper bounds it implies, its own small matching
    number, the per-layer sunflower-freeness, and the size cap f(s,k).
    """
    start = time.perf_counter()
    n, k = family.n, family.k
    nu, _ = matching_number(family)
    if nu >= s:
        raise ValueError(f"matching number {nu} is not below s = {s}")
    base = delta_base(family, s)
    params = _params(("n", n), ("k", k), ("s", s),
                     ("family_size", len(family)), ("base_size", len(base)))
    checks: list = []
    all_ok = True

    bmasks = base.base_masks
    covered = all(any(b & m == b for b in bmasks) for m in family.masks)
    checks.append(CheckBlock(
        "base-covers-family", "holds" if covered else "fails",
        details=(("members", len(family)),)))
    all_ok &= covered

    minimal = True
    for b1 in bmasks:
        for b2 in bmasks:
            if b1 != b2 and b1 & b2 == b1:
                minimal = False
    checks.append(CheckBlock(
        "base-antichain", "holds" if minimal else "fails"))
    all_ok &= minimal

    threshold_of = {}
    for size in range(1, k + 1):
        threshold_of[size] = (s * k - k + 1) ** size
    certs_ok = True
    n_certs = 0
    for kernel, flower in base.certificates:
        n_certs += 1
        if kernel.bits in set(family.member_masks):
            continue
        want = threshold_of[kernel.size]
        if len(flower.petals) != want or not flower.is_valid_for(family):
            certs_ok = False
    checks.append(CheckBlock(
        "branching-certificates", "holds" if certs_ok else "fails",
        details=(("count", n_certs),)))
    all_ok &= certs_ok

    size_bound = upp1_size_bound(base, n)
    ok_size = len(family) <= size_bound
    checks.append(CheckBlock(
        "size-upper-bound", "holds" if ok_size else "fails",
        details=(("family_size", len(family)), ("bound", size_bound))))
    all_ok &= ok_size

    deg_ok = True
    worst = ("", 0, 0)
    for v in range(1, n + 1):
        d = sum(1 for m in family.masks if m >> (v - 1) & 1)
        bnd = upp1_degree_bound(base, n, v)
        if d > bnd:
            deg_ok = False
            worst = (f"degree of {v}", d, bnd)
    checks.append(CheckBlock(
        "degree-upper-bound", "holds" if deg_ok else "fails"))
    all_ok &= deg_ok

    if len(base) == 0:
        checks.append(CheckBlock(
            "base-matching", "vacuous", details=(("reason", "empty base"),)))
        nu_base = 0
    else:
        nu_base, _ = matching_number(base.to_mixed_family())
        ok_nu = nu_base < s
        checks.append(CheckBlock(
            "base-matching", "holds" if ok_nu else "fails",
            details=(("nu_base", nu_base),)))
        all_ok &= ok_nu

    layers_ok = True
    for i in range(1, k):
        layer = base.layer(i + 1)
        if not layer:
            continue
        fam_layer = SetFamily.from_masks(n, i + 1,
                                         [ks.bits for ks in layer])
        r = (s * k - k + 1) ** i
        if find_delta_system(fam_layer, r) is not None:
            layers_ok = False
    checks.append(CheckBlock(
        "layers-sunflower-free", "holds" if layers_ok else "fails"))
    all_ok &= layers_ok

    cap = f_bound(s, k)
    derived = f_bound_derived(s, k)
    ok_cap = len(base) <= cap
    checks.append(CheckBlock(
        "base-size-cap", "holds" if ok_cap else "fails",
        details=(("base_size", len(base)), ("f_bound", cap),
                 ("within_derived_bound", len(base) <= derived))))
    all_ok &= ok_cap

    return VerificationReport(
        target="base-lemmas", strategy="structured", parameters=params,
        instances_checked=1, verdict="holds" if all_ok else "counterexample",
        witness=None if all_ok else family,
        witness_inequality=None if deg_ok else worst,
        checks=tuple(checks),
        elapsed=time.perf_counter() - start)


def verify_base_lemmas_sampled(n: int, k: int, s: int,
                               sampler: FamilySampler, budget: int = 200,
                               threads: int = 1) -> VerificationReport:
    """Run the full base-family check suite over sampled families."""
    _check_sampler(sampler, n, k, s)
    if sampler.mixed_sizes:
        raise ValueError("base-family checks need uniform samples")
    start = time.perf_counter()

    def trial(i: int):
        fam = sampler.family(i)
        rep = verify_base_lemmas(fam, s)
        if rep.verdict != "holds":
            return fam, rep
        return None

    results = _map_trials(trial, budget, threads)
    params = _params(("n", n), ("k", k), ("s", s))
    for hit in results:
        if hit is not None:
            fam, rep = hit
            return VerificationReport(
                target="base-lemmas", strategy="sampled", parameters=params,
                instances_checked=budget, verdict="counterexample",
                seed=sampler.seed, budget=budget, witness=fam,
                checks=rep.checks,
                elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="base-lemmas", strategy="sampled", parameters=params,
        instances_checked=budget, verdict="holds",
        seed=sampler.seed, budget=budget,
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# graph lemmas (k = 2)


def check_graph_lemma_str1(graph: SetFamily, s: int) -> bool:
    """If at least 2s vertices have degree >= s, the graph has a matching
    of size s. Returns True when the implication holds (including
    vacuously)."""
    if graph.k != 2:
        raise ValueError("graph checks need k = 2")
    degs = degree_vector(graph)
    if sum(1 for d in degs if d >= s) < 2 * s:
        return True
    return max_matching_graph(graph).size >= s


def check_graph_lemma_str2(graph: SetFamily, s: int) -> bool:
    """If the matching number is below s yet at least 2s+1 vertices have
    degree >= s-1, then some s-1 vertices cover every edge."""
    if graph.k != 2:
        raise ValueError("graph checks need k = 2")
    degs = degree_vector(graph)
    if sum(1 for d in degs if d >= s - 1) < 2 * s + 1:
        return True
    if max_matching_graph(graph).size >= s:
        return True
    tau, _ = vertex_cover_number(graph)
    return tau <= s - 1


def _scan_nu(adj: list, nverts: int) -> int:
    """Maximum matching size via memoized search over available-vertex
    masks. adj[v] is the neighbor bitmask of vertex v (0-based)."""
    memo: dict = {}

    def rec(avail: int) -> int:
        got = memo.get(avail)
        if got is not None:
            return got
        rest = avail
        u = -1
        ubit = 0
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            if adj[v] & avail & ~b:
                u, ubit = v, b
                break
            rest ^= b
        if u < 0:
            memo[avail] = 0
            return 0
        best = rec(avail ^ ubit)
        nb = adj[u] & avail & ~ubit
        while nb:
            vb = nb & -nb
            cand = 1 + rec(avail ^ ubit ^ vb)
            if cand > best:
                best = cand
            nb ^= vb
        memo[avail] = best
        return best

    return rec((1 << nverts) - 1)


def _scan_tau(edge_masks: list, cover_order: list) -> int:
    for cm in cover_order:
        ok = True
        for e in edge_masks:
            if not e & cm:
                ok = False
                break
        if ok:
            return cm.bit_count()
    raise AssertionError("full vertex set always covers")


def exhaustive_graph_scan(n_max: int, s: int,
                          which: str = "both") -> VerificationReport:
    """Exhaustively test the two graph lemmas over every graph on at most
    n_max labeled vertices (as graphs on exactly n_max vertices, allowing
    isolated ones). n_max is capped at 7: the scan walks all 2^C(n_max,2)
    graphs."""
    if not 2 <= n_max <= 7:
        raise ValueError("n_max must be between 2 and 7")
    if s < 1:
        raise ValueError("need s >= 1")
    if which not in ("str1", "str2", "both"):
        raise ValueError("which must be str1, str2 or both")
    start = time.perf_counter()
    pairs = list(itertools.combinations(range(n_max), 2))
    n_edges = len(pairs)
    pair_masks = [(1 << a) | (1 << b) for a, b in pairs]
    cover_order = sorted(range(1 << n_max),
                         key=lambda m: (m.bit_count(), m))
    params = _params(("n_max", n_max), ("s", s), ("which", which),
                     ("graphs", 1 << n_edges))

    do1 = which in ("str1", "both")
    do2 = which in ("str2", "both")
    for g in range(1 << n_edges):
        adj = [0] * n_max
        degs = [0] * n_max
        emasks = []
        gg = g
        while gg:
            b = gg & -gg
            idx = b.bit_length() - 1
            a, c = pairs[idx]
            adj[a] |= 1 << c
            adj[c] |= 1 << a
            degs[a] += 1
            degs[c] += 1
            emasks.append(pair_masks[idx])
            gg ^= b
        nu = None
        failed = None
        if do1 and sum(1 for d in degs if d >= s) >= 2 * s:
            nu = _scan_nu(adj, n_max)
            if nu < s:
                failed = "str1"
        if failed is None and do2 \
                and sum(1 for d in degs if d >= s - 1) >= 2 * s + 1:
            if nu is None:
                nu = _scan_nu(adj, n_max)
            if nu < s:
                tau = _scan_tau(emasks, cover_order)
                if tau > s - 1:
                    failed = "str2"
        if failed is not None:
            witness = SetFamily.from_masks(n_max, 2, emasks)
            return VerificationReport(
                target=f"graph-{failed}", strategy="exhaustive",
                parameters=params, instances_checked=g + 1,
                verdict="counterexample", witness=witness,
                elapsed=time.perf_counter() - start)

    return VerificationReport(
        target="graph-" + which, strategy="exhaustive", parameters=params,
        instances_checked=1 << n_edges, verdict="holds",
        notes=(f"all {1 << n_edges} graphs on {n_max} labeled vertices "
               "passed",),
        elapsed=time.perf_counter() - start)


def verify_intersecting_structure_scan(n_max: int) -> VerificationReport:
    """Exhaustively confirm that every intersecting graph on at most n_max
    vertices has either a vertex meeting all edges or support on at most 3
    vertices (a triangle)."""
    if not 2 <= n_max <= 7:
        raise ValueError("n_max must be between 2 and 7")
    start = time.perf_counter()
    pairs = list(itertools.combinations(range(n_max), 2))
    pair_masks = [(1 << a) | (1 << b) for a, b in pairs]
    n_edges = len(pairs)
    params = _params(("n_max", n_max), ("graphs", 1 << n_edges))
    checked = 0
    for g in range(1 << n_edges):
        emasks = []
        gg = g
        intersecting = True
        while gg:
            b = gg & -gg
            m = pair_masks[b.bit_length() - 1]
            for e in emasks:
                if e & m == 0:
                    intersecting = False
                    break
            if not intersecting:
                break
            emasks.append(m)
            gg ^= b
        if not intersecting or not emasks:
            continue
        checked += 1
        common = emasks[0]
        for e in emasks:
            common &= e
        support = 0
        for e in emasks:
            support |= e
        if common == 0 and support.bit_count() > 3:
            witness = SetFamily.from_masks(n_max, 2, emasks)
            return VerificationReport(
                target="intersecting-structure", strategy="exhaustive",
                parameters=params, instances_checked=checked,
                verdict="counterexample", witness=witness,
                elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="intersecting-structure", strategy="exhaustive",
        parameters=params, instances_checked=checked, verdict="holds",
        notes=("every nonempty intersecting graph scanned is a star or "
               "has support on 3 vertices",),
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# cover lemma


def verify_lemma_cover(family: SetFamily, s: int) -> VerificationReport:
    """Check: for k >= 3, a family with matching number below s whose
    base has no singleton and whose (k+2s-2)-th largest degree reaches
    binom(n-1,k-1) - binom(n-s,k-1) is covered by s-1 vertices.

    The conclusion is claimed for large n, so a failure at a fixed n is
    reported as inconclusive rather than counterexample.
    """
    n, k = family.n, family.k
    if k < 3:
        raise ValueError("this check needs k >= 3")
    if s < 2:
        raise ValueError("need s >= 2")
    start = time.perf_counter()
    nu, _ = matching_number(family)
    if nu >= s:
        raise ValueError(f"matching number {nu} is not below s = {s}")
    base = delta_base(family, s)
    if base.layer(1):
        raise ValueError("base family contains a singleton; this check "
                         "assumes none")
    bound = cover_degree_bound(n, k, s)
    index = k + 2 * s - 2
    seq = degree_sequence(family)
    d_idx = seq.d(index) if index <= n else 0
    tau, witness_cover = vertex_cover_number(family)
    params = _params(("n", n), ("k", k), ("s", s),
                     ("degree_index", index), ("bound", bound),
                     ("d_index", d_idx), ("tau", tau))
    checks = [CheckBlock(
        "cover-number",
        "holds" if tau <= s - 1 else "fails",
        details=(("tau", tau), ("target", s - 1),
                 ("cover", " ".join(str(v) for v in witness_cover.vertices)
                  if witness_cover.vertices else "(empty)")))]

    if index > n or d_idx < bound:
        return VerificationReport(
            target="lemma-cover", strategy="structured", parameters=params,
            instances_checked=1, verdict="holds",
            notes=("degree hypothesis not met at this n; the implication "
                   "is vacuous (tau recorded for reference)",),
            checks=tuple(checks),
            elapsed=time.perf_counter() - start)
    if tau <= s - 1:
        return VerificationReport(
            target="lemma-cover", strategy="structured", parameters=params,
            instances_checked=1, verdict="holds",
            checks=tuple(checks),
            elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="lemma-cover", strategy="structured", parameters=params,
        instances_checked=1, verdict="inconclusive",
        witness=family,
        witness_inequality=("tau <= s-1", tau, s - 1),
        notes=(f"degree hypothesis met but tau = {tau} > {s - 1} at "
               f"n = {n}; the statement is asymptotic in n, so this is "
               "not a refutation",),
        checks=tuple(checks),
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# shadow minimization


def verify_kk_exhaustive(n: int, k: int) -> VerificationReport:
    """Confirm by full enumeration that among all families of m k-subsets
    of [n], the colex initial segment minimizes the shadow, for every m.

    Walks all 2^binom(n,k) subfamilies, so binom(n,k) is capped at 16.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    total = binom(n, k)
    if total > 16:
        raise ValueError(f"binom(n,k) = {total} exceeds the enumeration "
                         "cap of 16")
    start = time.perf_counter()
    all_edges = list(colex_initial_segment(n, k, total).masks)
    # positions for (k-1)-sets so each edge's shadow is a small bitmask
    sub_index: dict = {}
    edge_shadows = []
    for e in all_edges:
        sh = 0
        m = e
        while m:
            b = m & -m
            sub = e ^ b
            pos = sub_index.setdefault(sub, len(sub_index))
            sh |= 1 << pos
            m ^= b
        edge_shadows.append(sh)

    segment_value = [0] * (total + 1)
    acc = 0
    for i, sh in enumerate(edge_shadows):
        acc |= sh
        segment_value[i + 1] = acc.bit_count()

    best_seen = [None] * (total + 1)
    params = _params(("n", n), ("k", k), ("subfamilies", 1 << total))
    for sub in range(1 << total):
        sh = 0
        m = sub
        while m:
            b = m & -m
            sh |= edge_shadows[b.bit_length() - 1]
            m ^= b
        size = sub.bit_count()
        ssz = sh.bit_count()
        if ssz < segment_value[size]:
            picked = [all_edges[i] for i in range(total) if sub >> i & 1]
            witness = SetFamily.from_masks(n, k, picked)
            return VerificationReport(
                target="kk-min-shadow", strategy="exhaustive",
                parameters=params, instances_checked=sub + 1,
                verdict="counterexample", witness=witness,
                witness_inequality=(
                    f"shadow size >= {segment_value[size]} at m={size}",
                    ssz, segment_value[size]),
                elapsed=time.perf_counter() - start)
        if best_seen[size] is None or ssz < best_seen[size]:
            best_seen[size] = ssz

    attained = all(best_seen[m] == segment_value[m]
                   for m in range(total + 1))
    notes = ["no subfamily beats the colex initial segment of its size"]
    if attained:
        notes.append("the segment value is attained as the true minimum "
                     "at every size")
    return VerificationReport(
        target="kk-min-shadow", strategy="exhaustive", parameters=params,
        instances_checked=1 << total, verdict="holds",
        notes=tuple(notes),
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# hill-climb search


def search_extremal(n: int, k: int, s: int, t: int, budget: int, seed: int,
                    restart_prob: float = 0.2,
                    plateau: int = 40) -> VerificationReport:
    """Hill-climb over k-uniform families with matching number below s,
    maximizing (t-th largest degree, family size). Moves are add / remove /
    swap of a single member; candidates violating the matching constraint
    are rejected by the exact engine. After `plateau` consecutive
    rejections the walk may restart (probability restart_prob) from one of
    the seed families.

    Verdict is counterexample only if the best family found exceeds
    binom(n-1,k-1) - binom(n-s,k-1) at position t; otherwise inconclusive
    (a search that finds nothing proves nothing).
    """
    if not 1 <= t <= n:
        raise ValueError("degree index out of range")
    if s < 2 or k < 1:
        raise ValueError("need s >= 2 and k >= 1")
    if budget < 1:
        raise ValueError("budget must be positive")
    start = time.perf_counter()
    bound = cover_degree_bound(n, k, s)
    pool = list(colex_initial_segment(n, k, binom(n, k)).masks)
    rng = random.Random(seed)

    seeds: list = [frozenset()]
    try:
        seeds.append(frozenset(construct_G(n, k, s).masks))
    except ValueError:
        pass
    if s >= 3:
        try:
            seeds.append(frozenset(construct_H1(n, k, s).masks))
        except ValueError:
            pass
        if k >= 3:
            try:
                seeds.append(frozenset(construct_H2(n, k, s).masks))
            except ValueError:
                pass
    seeds.append(frozenset(
        construct_cover_family(n, k, range(1, s)).masks))

    def score(masks: frozenset) -> tuple:
        if not masks:
            return (0, 0)
        degs = [0] * n
        for m in masks:
            mm = m
            while mm:
                b = mm & -mm
                degs[b.bit_length() - 1] += 1
                mm ^= b
        degs.sort(reverse=True)
        return (degs[t - 1], len(masks))

    def nu_small(masks: frozenset) -> bool:
        if not masks:
            return True
        fam = SetFamily.from_masks(n, k, masks)
        return find_disjoint_members(fam, s) is None

    current = seeds[1] if len(seeds) > 1 else seeds[0]
    cur_score = score(current)
    best, best_score = current, cur_score
    stall = 0
    for _ in range(budget):
        roll = rng.random()
        cand = None
        if roll < 0.5:
            e = pool[rng.randrange(len(pool))]
            if e not in current:
                cand = current | {e}
        elif roll < 0.7:
            if current:
                members = sorted(current)
                cand = current - {members[rng.randrange(len(members))]}
        else:
            if current:
                members = sorted(current)
                out = members[rng.randrange(len(members))]
                inc = pool[rng.randrange(len(pool))]
                if inc != out:
                    cand = (current - {out}) | {inc}
        moved = False
        if cand is not None and cand != current and nu_small(cand):
            sc = score(cand)
            if sc > cur_score:
                current, cur_score = cand, sc
                moved = True
                if sc > best_score:
                    best, best_score = cand, sc
        if moved:
            stall = 0
        else:
            stall += 1
            if stall >= plateau and rng.random() < restart_prob:
                current = seeds[rng.randrange(len(seeds))]
                cur_score = score(current)
                stall = 0

    witness = SetFamily.from_masks(n, k, best)
    params = _params(("n", n), ("k", k), ("s", s), ("degree_index", t),
                     ("bound", bound), ("best_d", best_score[0]),
                     ("best_size", best_score[1]))
    if best_score[0] > bound:
        return VerificationReport(
            target="search-extremal", strategy="hillclimb",
            parameters=params, instances_checked=budget,
            verdict="counterexample", seed=seed, budget=budget,
            witness=witness,
            witness_inequality=(f"d_{t} <= {bound}", best_score[0], bound),
            elapsed=time.perf_counter() - start)
    return VerificationReport(
        target="search-extremal", strategy="hillclimb", parameters=params,
        instances_checked=budget, verdict="inconclusive",
        seed=seed, budget=budget, witness=witness,
        notes=(f"best family found stays within the bound: d_{t} = "
               f"{best_score[0]} <= {bound}; absence of a find proves "
               "nothing",),
        elapsed=time.perf_counter() - start)
