"""Command-line entry point.

Exit codes: 0 success, 1 input error, 2 hypothesis or precondition
violation (including an exhausted time budget), 3 falsification found.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
from dataclasses import dataclass, field

from . import corpus, suites
from .colorers import HypothesisError, Telemetry, color_forest_bound, color_ore, color_vizing
from .coloring import dumps_coloring
from .deficiency import PreconditionError, check_theorem_main
from .exact import audit_certificate, maximal_colorable_subgraph, shuffled_order
from .graph import GraphFormatError, dumps, read_graph, to_graph6
from .tuza import (ScaleError, TuzaInstance, max_triangle_packing, min_triangle_cover,
                   set_to_cover, packing_to_coloring, phi_k, alpha_prime_k, tau_nu_join,
                   coloring_to_packing)

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_FALSIFIED = 0, 1, 2, 3
BUDGET_ENV = "EDGECOLOR_TIME_BUDGET"
MAX_EXHAUSTIVE_N = 5


class BudgetExceeded(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    k: int | None = None
    seed: int | None = None
    max_n: int = 8
    max_mult: int = 3
    time_budget: float = 0.0     # seconds; 0 disables the guard
    output: str | None = None
    verbose: int = 0

    def __post_init__(self):
        if self.max_n < 1 or self.max_mult < 1 or self.time_budget < 0:
            raise ValueError("guards must be positive")


def _budget_from_env() -> float:
    raw = os.environ.get(BUDGET_ENV, "0")
    try:
        return float(raw)
    except ValueError:
        raise SystemExit(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}")


def _arm(budget: float) -> None:
    if budget > 0 and hasattr(signal, "SIGALRM"):
        def expire(signum, frame):
            raise BudgetExceeded(f"time budget of {budget:g}s exhausted")
        signal.signal(signal.SIGALRM, expire)
        signal.setitimer(signal.ITIMER_REAL, budget)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _finish(rep: suites.SuiteReport, cfg: RunConfig) -> int:
    print(rep.summary())
    for key in ("headline", "negative_control_failures"):
        if key in rep.notes:
            print(f"{key}: {rep.notes[key]}")
    if rep.telemetry:
        print("telemetry:", json.dumps(rep.telemetry, sort_keys=True))
    if cfg.output:
        _write(cfg.output, rep.to_json() + "\n")
    return EXIT_OK if rep.ok else EXIT_FALSIFIED


# -- commands ----------------------------------------------------------------

def cmd_color(args, cfg: RunConfig) -> int:
    g = read_graph(args.input)
    tel = Telemetry()
    fn = {"vizing": color_vizing, "ore": color_ore, "forest": color_forest_bound}[args.bound]
    try:
        c = fn(g, tel)
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _write(cfg.output, dumps_coloring(c))
    if cfg.verbose:
        print("telemetry:", json.dumps(tel.as_dict(), sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_maximal(args, cfg: RunConfig) -> int:
    g = read_graph(args.input)
    order = shuffled_order(g, cfg.seed) if cfg.seed is not None else None
    cert = maximal_colorable_subgraph(g, cfg.k, order, mode=args.mode)
    _write(cfg.output, dumps_coloring(cert.coloring))
    if args.mode == "certificate":
        print(f"# certified={cert.certified} audit={audit_certificate(cert)}", file=sys.stderr)
        if args.report:
            print(json.dumps(check_theorem_main(cert).to_dict(), sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    th = args.theorem
    if args.negative_control:
        rep = suites.SuiteReport("negative-control", {})
        suites._negative_control(rep, [(g, 2) for g in corpus.multigraphs_up_to_iso(4, 1)])
        print(f"expected failures recorded: {len(rep.expected_failures)}")
        if cfg.output:
            _write(cfg.output, rep.to_json() + "\n")
        return EXIT_OK
    if th == "val":
        n = args.exhaustive or 6
        return _finish(suites.val_suite(max_n=n), cfg)
    theorems = {"simple": ("simple",), "main": ("main",), "maxdelta": ("maxdelta",),
                "structure": ("structure",), "kostochka": ("main",)}[th]
    kost = th == "kostochka"
    if args.exhaustive:
        if args.exhaustive > MAX_EXHAUSTIVE_N:
            raise ScaleError(f"exhaustive mode is guarded at n <= {MAX_EXHAUSTIVE_N}")
        ks = range(1, (cfg.k or 4) + 1)
        progress = print if cfg.verbose else None
        rep = suites.exhaustive_deficiency(args.exhaustive, min(cfg.max_mult, 2), ks,
                                           theorems, kost, workers=args.workers,
                                           progress=progress)
    else:
        rep = suites.random_deficiency(cfg.seed if cfg.seed is not None else 7, args.trials,
                                       cfg.max_n, cfg.max_mult, cfg.k or 5, theorems, kost)
    return _finish(rep, cfg)


def cmd_tuza(args, cfg: RunConfig) -> int:
    h = read_graph(args.h)
    try:
        inst = TuzaInstance(cfg.k, h)
    except ValueError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    tau, nu = tau_nu_join(inst)
    _, alpha_col = alpha_prime_k(h, cfg.k)
    _, wit = phi_k(h, cfg.k)
    packing = coloring_to_packing(cfg.k, {e[:2]: c for e, c in alpha_col.items()})
    cover = set_to_cover(cfg.k, h, wit.D)
    print(f"tau={tau} nu={nu}")
    print("packing:", " ".join("-".join(map(str, t)) for t in packing))
    print("cover:", " ".join(f"{a}-{b}" for a, b in cover))
    status = "OK"
    if not args.no_crosscheck:
        g = inst.g
        ok = (len(min_triangle_cover(g)) == tau and len(max_triangle_packing(g)) == nu
              and len(cover) == tau and len(packing) == nu
              and packing_to_coloring(cfg.k, h, packing) is not None)
        status = "OK" if ok else "MISMATCH"
    print(f"cross-check {status}")
    return EXIT_OK if status == "OK" else EXIT_FALSIFIED


def cmd_conjecture(args, cfg: RunConfig) -> int:
    if args.replay:
        with open(args.replay) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        still = sum(suites.replay_candidate(ln) for ln in lines)
        print(f"replayed {len(lines)} candidate(s); {still} still without a witness")
        return EXIT_OK
    rep = suites.conjecture_sweep(cfg.max_n, tuple(range(1, (cfg.k or 2) + 1)),
                                  progress=lambda s: print(s, flush=True))
    cands = rep.notes["candidates"]
    if cands:
        with open(args.candidates, "w") as fh:
            fh.write("\n".join(cands) + "\n")
        print(f"candidates written to {args.candidates}")
    return _finish(rep, cfg)


def cmd_gen(args, cfg: RunConfig) -> int:
    if args.all is not None:
        graphs = corpus.simple_graphs(args.all)
        if args.triangle_free:
            graphs = corpus.triangle_free_graphs(args.all, args.all)
        _write(cfg.output, "".join(to_graph6(g) + "\n" for g in graphs))
        return EXIT_OK
    seed = cfg.seed if cfg.seed is not None else 0
    g = corpus.random_instance(seed, args.index, cfg.max_n, cfg.max_mult, min_n=cfg.max_n)
    _write(cfg.output, to_graph6(g) + "\n" if args.graph6 else dumps(g))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgecolor", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k_required=False):
        sp.add_argument("-o", "--out", dest="output")
        sp.add_argument("--k", type=int, required=k_required)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--time-budget", type=float, default=None,
                        help=f"seconds (default from ${BUDGET_ENV}, 0 = none)")

    sp = sub.add_parser("color", help="color a graph within a classical bound")
    sp.add_argument("input")
    sp.add_argument("--bound", choices=("vizing", "ore", "forest"), default="ore")
    common(sp)

    sp = sub.add_parser("maximal", help="maximal k-edge-colorable subgraph")
    sp.add_argument("input")
    sp.add_argument("--mode", choices=("certificate", "greedy"), default="certificate")
    sp.add_argument("--report", action="store_true", help="print the deficiency report")
    common(sp, k_required=True)

    sp = sub.add_parser("verify", help="run a verifier suite")
    sp.add_argument("--theorem", choices=("simple", "main", "maxdelta", "structure",
                                          "kostochka", "val"), default="simple")
    sp.add_argument("--exhaustive", type=int, metavar="N")
    sp.add_argument("--n", dest="max_n", type=int, default=8)
    sp.add_argument("--max-mult", type=int, default=3)
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--negative-control", action="store_true")
    common(sp)

    sp = sub.add_parser("tuza", help="tau and nu of I_k v H via the join formulas")
    sp.add_argument("--h", required=True)
    sp.add_argument("--no-crosscheck", action="store_true")
    common(sp, k_required=True)

    sp = sub.add_parser("conjecture", help="sweep simple graphs for k-cover candidates")
    sp.add_argument("--n", dest="max_n", type=int, default=7)
    sp.add_argument("--candidates", default="conjecture_candidates.jsonl")
    sp.add_argument("--replay", metavar="FILE")
    common(sp)

    sp = sub.add_parser("gen", help="generate graphs")
    sp.add_argument("--n", dest="max_n", type=int, default=6)
    sp.add_argument("--max-mult", type=int, default=1)
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--graph6", action="store_true")
    sp.add_argument("--all", type=int, metavar="N", help="every simple graph on N vertices")
    sp.add_argument("--triangle-free", action="store_true")
    common(sp)
    return p


COMMANDS = {"color": cmd_color, "maximal": cmd_maximal, "verify": cmd_verify,
            "tuza": cmd_tuza, "conjecture": cmd_conjecture, "gen": cmd_gen}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    budget = args.time_budget if args.time_budget is not None else _budget_from_env()
    try:
        cfg = RunConfig(args.command, k=args.k, seed=args.seed,
                        max_n=getattr(args, "max_n", 8), max_mult=getattr(args, "max_mult", 3),
                        time_budget=budget, output=args.output, verbose=args.verbose)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.k is not None and cfg.k < 1:
        print("error: k must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    _arm(cfg.time_budget)
    try:
        return COMMANDS[args.command](args, cfg)
    except GraphFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, ScaleError, BudgetExceeded) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    finally:
        if cfg.time_budget > 0 and hasattr(signal, "SIGALRM"):
            signal.setitimer(signal.ITIMER_REAL, 0)


if __name__ == "__main__":
    sys.exit(main())
