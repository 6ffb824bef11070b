"""Command line front end.

Subcommands fall into two groups. Family producers (construct, shift,
shadow, delta-base) write the family file format to --output or stdout.
Report producers (stats, verify, search) honor --format text|json.

Exit codes for verify and search:
  0  verdict holds (or counterexample when --expect-violation is set)
  1  unexpected counterexample (or holds under --expect-violation)
  2  invalid input or arguments
  3  inconclusive
Diagnostics go to stderr; stdout carries only the requested artifact.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .colexshadow import cover_degree_bound, shadow
from .constructions import (certify, construct_Ai, construct_G, construct_H1,
                            construct_H2, construct_cover_family)
from .matchcover import is_intersecting, matching_number, vertex_cover_number
from .setcore import (MixedFamily, SetFamily, degree_sequence, ore_degree,
                      parse_family, serialize_family)
from .shifting import is_ell_shifted, shift_to_ell
from .sunflower import delta_base
from .verify import (FamilySampler, exhaustive_graph_scan, search_extremal,
                     verify_base_lemmas, verify_base_lemmas_sampled,
                     verify_cor_ore, verify_kk_exhaustive, verify_lemma_cover,
                     verify_lemma_ellshift, verify_lemma_ellshift_sampled,
                     verify_lemma_mdeg, verify_thm_main, verify_thm_main2)

VERIFY_TARGETS = ("thm-main", "thm-main2", "cor-ore", "lemma-ellshift",
                  "lemma-mdeg", "base-lemmas", "graph-str1", "graph-str2",
                  "lemma-cover", "kk")


@dataclass(frozen=True)
class CliConfig:
    seed: int | None
    budget: int
    threads: int
    output: str | None
    fmt: str

    @classmethod
    def from_args(cls, args) -> "CliConfig":
        budget = getattr(args, "budget", 200)
        threads = getattr(args, "threads", 1)
        if budget < 1:
            raise ValueError("--budget must be at least 1")
        if threads < 1:
            raise ValueError("--threads must be at least 1")
        return cls(seed=getattr(args, "seed", None),
                   budget=budget,
                   threads=threads,
                   output=getattr(args, "output", None),
                   fmt=getattr(args, "format", "text"))


def _default_threads() -> int:
    raw = os.environ.get("EXTREMAL_HYPER_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return value if value >= 1 else 1


def _emit(text: str, cfg: CliConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read())


def _load_uniform(path: str) -> SetFamily:
    fam = _load(path)
    if not isinstance(fam, SetFamily):
        raise ValueError(f"{path}: this command needs a uniform family "
                         "(header with k > 0)")
    return fam


def _need(args, *names: str) -> None:
    missing = [f"--{name}" for name in names
               if getattr(args, name.replace("-", "_"), None) is None]
    if missing:
        raise ValueError("missing required option(s): " + " ".join(missing))


def _exit_for(verdict: str, expect_violation: bool) -> int:
    if verdict == "holds":
        return 1 if expect_violation else 0
    if verdict == "counterexample":
        return 0 if expect_violation else 1
    return 3


def _sampler(args, cfg: CliConfig, *, mode: str | None = None,
             mixed: bool = False) -> FamilySampler:
    if cfg.seed is None:
        raise ValueError("--seed is required for sampled verification")
    return FamilySampler(mode=mode or args.sampler, n=args.n, k=args.k,
                         s=args.s, seed=cfg.seed, mixed_sizes=mixed,
                         ell=getattr(args, "ell", None))


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_stats(args, cfg: CliConfig) -> int:
    fam = _load(args.file)
    info: dict = {"ground": fam.n, "members": len(fam)}
    if isinstance(fam, SetFamily):
        info["uniform"] = fam.k
    else:
        info["cap"] = fam.cap
        info["has_empty"] = fam.has_empty
    seq = degree_sequence(fam)
    info["degree_sequence"] = list(seq.values)
    if args.s is not None and isinstance(fam, SetFamily):
        s, k, n = args.s, fam.k, fam.n
        info["bound"] = cover_degree_bound(n, k, s)
        marks = []
        for label, t in (("n", n), ("k+2s-2", k + 2 * s - 2),
                         ("2sk+1", 2 * s * k + 1)):
            marks.append({"label": label, "t": t,
                          "d": seq.d(t) if 1 <= t <= n else None})
        info["degree_marks"] = marks
    undefined = isinstance(fam, MixedFamily) and fam.has_empty
    if undefined:
        info["matching_number"] = None
        info["vertex_cover_number"] = None
    else:
        nu, mwit = matching_number(fam)
        tau, cwit = vertex_cover_number(fam)
        info["matching_number"] = nu
        info["matching_witness"] = [sorted(e.vertices()) for e in mwit.edges]
        info["vertex_cover_number"] = tau
        info["cover_witness"] = list(cwit.vertices.vertices())
    if isinstance(fam, SetFamily):
        info["ore_degree"] = ore_degree(fam)
    info["intersecting"] = is_intersecting(fam)

    if cfg.fmt == "json":
        _emit(json.dumps(info, sort_keys=True, indent=2) + "\n", cfg)
        return 0
    lines = []
    for key in ("ground", "uniform", "cap", "members", "has_empty",
                "degree_sequence", "bound", "degree_marks",
                "matching_number", "matching_witness",
                "vertex_cover_number", "cover_witness",
                "ore_degree", "intersecting"):
        if key not in info:
            continue
        value = info[key]
        if key == "degree_marks":
            for mark in value:
                d = "(index exceeds ground size)" if mark["d"] is None \
                    else mark["d"]
                lines.append(f"d_{mark['t']} (t = {mark['label']}): {d}")
            continue
        if key == "degree_sequence":
            value = " ".join(str(d) for d in value)
        elif key == "matching_witness":
            value = "; ".join(" ".join(str(v) for v in e) for e in value) \
                or "(empty)"
        elif key == "cover_witness":
            value = " ".join(str(v) for v in value) or "(empty)"
        elif value is None:
            value = ("none" if key == "ore_degree"
                     else "undefined (family contains the empty set)")
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        lines.append(f"{key}: {value}")
    _emit("\n".join(lines) + "\n", cfg)
    return 0


def _cmd_construct(args, cfg: CliConfig) -> int:
    which = args.family
    cert: list = []
    if which == "Ai":
        _need(args, "n", "k", "s", "i")
        fam = construct_Ai(args.n, args.k, args.s, args.i)
        nu, _ = matching_number(fam)
        cert.append(f"nu = {nu} (claimed value s = {args.s})")
    elif which in ("G", "H1", "H2"):
        _need(args, "n", "k", "s")
        builder = {"G": construct_G, "H1": construct_H1,
                   "H2": construct_H2}[which]
        fam = builder(args.n, args.k, args.s)
        payload = certify(fam, args.s)
        head = args.k + 2 * args.s - 3
        cert.append(f"nu = {payload['nu']} (claimed value s-1 = "
                    f"{args.s - 1})")
        if f"d_{head}" in payload:
            cert.append(f"d_{head} = {payload[f'd_{head}']} > bound = "
                        f"{payload['bound']}")
    else:
        _need(args, "n", "k", "cover_set")
        vertices = _parse_vertex_list(args.cover_set)
        fam = construct_cover_family(args.n, args.k, vertices)
        nu, _ = matching_number(fam)
        cert.append(f"nu = {nu}")
        cert.append(f"every vertex outside the cover set has degree "
                    f"{cover_degree_bound(args.n, args.k, len(set(vertices)) + 1)}")
    text = serialize_family(fam).rstrip("\n")
    for line in cert:
        text += "\n# certificate: " + line
    _emit(text + "\n", cfg)
    return 0


def _parse_vertex_list(raw: str) -> list:
    parts = raw.replace(",", " ").split()
    if not parts:
        raise ValueError("--cover-set must list at least one vertex")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"--cover-set: not a vertex list: {raw!r}") from None


def _cmd_shift(args, cfg: CliConfig) -> int:
    fam = _load_uniform(args.file)
    _need(args, "ell")
    shifted = shift_to_ell(fam, args.ell)
    if not is_ell_shifted(shifted, args.ell):
        raise RuntimeError("fixpoint output failed the stability recheck")
    _emit(serialize_family(shifted), cfg)
    return 0


def _cmd_shadow(args, cfg: CliConfig) -> int:
    fam = _load_uniform(args.file)
    _emit(serialize_family(shadow(fam)), cfg)
    return 0


def _cmd_delta_base(args, cfg: CliConfig) -> int:
    fam = _load_uniform(args.file)
    _need(args, "s")
    base = delta_base(fam, args.s)
    _emit(base.to_text(), cfg)
    return 0


def _cmd_verify(args, cfg: CliConfig) -> int:
    target = args.target
    if target == "thm-main":
        _need(args, "n", "k", "s")
        sampler = (None if args.k == 2 and args.s == 2
                   else _sampler(args, cfg))
        report = verify_thm_main(args.n, args.k, args.s, sampler,
                                 cfg.budget, cfg.threads)
    elif target == "thm-main2":
        _need(args, "n", "k", "s")
        if args.k == 2 and args.s == 2:
            sampler = None
        elif cfg.seed is not None:
            sampler = _sampler(args, cfg)
        else:
            sampler = None
        report = verify_thm_main2(args.n, args.k, args.s, sampler,
                                  cfg.budget, cfg.threads, index=args.index)
    elif target == "cor-ore":
        _need(args, "n", "k", "s")
        if args.k == 2 and args.s == 2 and cfg.seed is None:
            sampler = None
        else:
            sampler = _sampler(args, cfg)
        report = verify_cor_ore(args.n, args.k, args.s, sampler,
                                cfg.budget, cfg.threads)
    elif target == "lemma-ellshift":
        _need(args, "ell", "s")
        if args.file is not None:
            fam = _load_uniform(args.file)
            report = verify_lemma_ellshift(fam, args.ell, args.s)
        else:
            _need(args, "n", "k")
            sampler = _sampler(args, cfg)
            report = verify_lemma_ellshift_sampled(
                args.n, args.k, args.s, args.ell, sampler,
                cfg.budget, cfg.threads)
    elif target == "lemma-mdeg":
        _need(args, "n", "k", "s")
        sampler = _sampler(args, cfg, mode="random-maximal-nu", mixed=True)
        report = verify_lemma_mdeg(args.n, args.k, args.s, sampler,
                                   cfg.budget, cfg.threads)
    elif target == "base-lemmas":
        _need(args, "s")
        if args.file is not None:
            fam = _load_uniform(args.file)
            report = verify_base_lemmas(fam, args.s)
        else:
            _need(args, "n", "k")
            sampler = _sampler(args, cfg)
            report = verify_base_lemmas_sampled(args.n, args.k, args.s,
                                                sampler, cfg.budget,
                                                cfg.threads)
    elif target in ("graph-str1", "graph-str2"):
        _need(args, "nmax", "s")
        report = exhaustive_graph_scan(args.nmax, args.s,
                                       target.removeprefix("graph-"))
    elif target == "lemma-cover":
        _need(args, "file", "s")
        fam = _load_uniform(args.file)
        report = verify_lemma_cover(fam, args.s)
    else:  # kk
        _need(args, "n", "k")
        report = verify_kk_exhaustive(args.n, args.k)

    _emit(report.to_json() if cfg.fmt == "json" else report.to_text(), cfg)
    return _exit_for(report.verdict, args.expect_violation)


def _cmd_search(args, cfg: CliConfig) -> int:
    _need(args, "n", "k", "s", "t")
    if cfg.seed is None:
        raise ValueError("--seed is required for search")
    report = search_extremal(args.n, args.k, args.s, args.t,
                             cfg.budget, cfg.seed)
    _emit(report.to_json() if cfg.fmt == "json" else report.to_text(), cfg)
    return _exit_for(report.verdict, args.expect_violation)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    out_p = argparse.ArgumentParser(add_help=False)
    out_p.add_argument("--output", metavar="PATH",
                       help="write to PATH instead of stdout")
    fmt_p = argparse.ArgumentParser(add_help=False)
    fmt_p.add_argument("--format", choices=("text", "json"), default="text",
                       help="report format (default: text)")
    rand_p = argparse.ArgumentParser(add_help=False)
    rand_p.add_argument("--seed", type=int,
                        help="base seed for sampling (trial i uses seed+i)")
    rand_p.add_argument("--budget", type=int, default=200,
                        help="number of sampled trials (default: 200)")
    rand_p.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker threads; results do not depend on this "
                             "(default: EXTREMAL_HYPER_THREADS or 1)")

    parser = argparse.ArgumentParser(
        prog="extremal-hyper",
        description="Degree bounds, shifting, sunflowers and verification "
                    "for uniform set families with a bounded matching "
                    "number.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[out_p, fmt_p],
                       help="summary statistics of a family file")
    p.add_argument("--file", required=True)
    p.add_argument("--s", type=int,
                   help="also report the degree bound and the order "
                        "statistics at t = n, k+2s-2 and 2sk+1")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("construct", parents=[out_p],
                       help="emit a named extremal construction")
    p.add_argument("family", choices=("Ai", "G", "H1", "H2", "cover"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--i", type=int, help="index for the Ai construction")
    p.add_argument("--cover-set", metavar="VERTICES",
                   help="cover vertices, e.g. '1 2 3' (cover only)")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("shift", parents=[out_p],
                       help="emit the shift fixpoint of a family on [ell]")
    p.add_argument("--file", required=True)
    p.add_argument("--ell", type=int)
    p.set_defaults(handler=_cmd_shift)

    p = sub.add_parser("shadow", parents=[out_p],
                       help="emit the (k-1)-shadow of a family")
    p.add_argument("--file", required=True)
    p.set_defaults(handler=_cmd_shadow)

    p = sub.add_parser("delta-base", parents=[out_p],
                       help="emit the layered minimal base with "
                            "sunflower certificates")
    p.add_argument("--file", required=True)
    p.add_argument("--s", type=int)
    p.set_defaults(handler=_cmd_delta_base)

    p = sub.add_parser("verify", parents=[out_p, fmt_p, rand_p],
                       help="run a verification target, print a report")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--index", type=int,
                   help="degree order statistic (thm-main2)")
    p.add_argument("--nmax", type=int,
                   help="vertex count for exhaustive graph scans")
    p.add_argument("--file", help="family file for file-based targets")
    p.add_argument("--sampler", choices=(
        "random-maximal-nu", "subfamily-of-cover",
        "subfamily-of-star-triangle", "shifted-random", "mixed-mode"),
        default="mixed-mode")
    p.add_argument("--expect-violation", action="store_true",
                   help="invert the holds/counterexample exit codes")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("search", parents=[out_p, fmt_p, rand_p],
                       help="hill-climb for families with a large t-th "
                            "largest degree")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--expect-violation", action="store_true")
    p.set_defaults(handler=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig.from_args(args)
        return args.handler(args, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
