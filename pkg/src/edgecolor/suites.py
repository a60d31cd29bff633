"""Property suites over exhaustive and seeded corpora.

Every runner returns a :class:`SuiteReport` whose JSON form is a pure
function of the runner's parameters; wall-clock timings are kept out of it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import corpus
from .colorers import (HypothesisError, Telemetry, check_star_forest_hypothesis,
                       color_forest_bound, color_ore, color_vizing)
from .coloring import dumps_coloring, is_proper, loads_coloring
from .deficiency import (audit_definitions, check_corollary_maxdelta,
                         check_small_k_structure, check_theorem_main,
                         check_theorem_simple, critical_edges, local_sets,
                         val_check)
from .exact import (MaximalSubgraphCertificate, all_maximal_subgraphs,
                    audit_certificate, certificate_for, certificate_from_coloring,
                    chromatic_index,
                    maximal_colorable_subgraph, shuffled_order)
from .graph import (Multigraph, degree_stats, dumps, is_forest, loads, max_degree,
                    star_subgraphs)
from .kostochka import (certificate_invariants, certificate_slack,
                        verify_lemma_disjoint, verify_lemma_oy,
                        verify_lemma_path)
from .tuza import (TuzaInstance, check_alphi, cover_to_set, is_triangle_free,
                   packing_to_coloring, set_to_cover,
                   conjecture_kcover_search, is_k_dependent,
                   max_triangle_packing, min_triangle_cover, phi_k, phi_value,
                   reduce_to_k_dependent, tau_nu_join)


@dataclass
class SuiteReport:
    name: str
    params: dict
    checks: dict[str, list[int]] = field(default_factory=dict)   # name -> [passed, failed]
    records: list[dict] = field(default_factory=list)            # replayable failures
    expected_failures: list[dict] = field(default_factory=list)  # negative controls
    telemetry: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def add(self, check: str, ok: bool, record: dict | None = None) -> bool:
        row = self.checks.setdefault(check, [0, 0])
        row[0 if ok else 1] += 1
        if not ok:
            rec = {"check": check}
            rec.update(record or {})
            self.records.append(rec)
        return ok

    def count(self, key: str, by: int = 1) -> None:
        self.notes[key] = self.notes.get(key, 0) + by

    @property
    def passed(self) -> int:
        return sum(p for p, _ in self.checks.values())

    @property
    def failed(self) -> int:
        return sum(f for _, f in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> str:
        data = asdict(self)
        data["total"] = self.passed + self.failed
        data["passed"] = self.passed
        data["failed"] = self.failed
        return json.dumps(data, sort_keys=True, indent=1)

    def summary(self) -> str:
        parts = [f"{k}: {p}/{p + f}" for k, (p, f) in sorted(self.checks.items())]
        return f"[{self.name}] {'PASS' if self.ok else 'FAIL'} " + ", ".join(parts)


def _cert_record(cert: MaximalSubgraphCertificate, **extra) -> dict:
    rec = {"graph": dumps(cert.graph), "k": cert.k, "coloring": dumps_coloring(cert.coloring)}
    rec.update(extra)
    return rec


def _graph_record(g: Multigraph, **extra) -> dict:
    rec = {"graph": dumps(g)}
    rec.update(extra)
    return rec


# -- deficiency and auxiliary-digraph lemmas --------------------------------

def check_kostochka(cert: MaximalSubgraphCertificate, rep: SuiteReport) -> None:
    """Lemma verifiers at every deficient ``y`` with nonempty ``U^k(y)``."""
    main = {r.v: r for r in check_theorem_main(cert, observational=True).records}
    for y in cert.graph.vertices:
        if cert.coloring.d_M(y) >= cert.k:
            continue
        _, Uk, _ = local_sets(cert, y)
        if not Uk:
            continue
        rep.count("kostochka_pairs", len(Uk))
        for name, fn in (("lemma_oy", verify_lemma_oy), ("lemma_path", verify_lemma_path),
                         ("lemma_disjoint", verify_lemma_disjoint)):
            fails: list[str] = []
            rep.add(name, fn(cert, y, fails), _cert_record(cert, y=y, detail=fails))
        bad = certificate_invariants(cert, y)
        rep.add("certificate_invariants", not bad, _cert_record(cert, y=y, detail=bad))
        rep.add("slack_crosscheck", certificate_slack(cert, y) == main[y].main_slack,
                _cert_record(cert, y=y))


def _check_cert(cert: MaximalSubgraphCertificate, rep: SuiteReport, theorems: Iterable[str],
                kostochka: bool) -> None:
    rep.add("certified", cert.certified, _cert_record(cert))
    for th in theorems:
        if th == "simple":
            r = check_theorem_simple(cert)
            rep.add("theorem_simple", r.ok, _cert_record(cert, violations=[asdict(v) for v in r.violations]))
        elif th == "main":
            r = check_theorem_main(cert)
            rep.add("theorem_main", r.ok, _cert_record(cert, violations=[asdict(v) for v in r.violations]))
        elif th == "maxdelta":
            if cert.graph.is_simple():
                rep.add("corollary_maxdelta", check_corollary_maxdelta(cert), _cert_record(cert))
        elif th == "structure":
            bad = audit_definitions(cert)
            rep.add("definitions", not bad, _cert_record(cert, detail=bad))
            rep.add("small_k_structure", check_small_k_structure(cert), _cert_record(cert))
        else:
            raise ValueError(f"unknown theorem {th!r}")
    if kostochka:
        check_kostochka(cert, rep)


def _negative_control(rep: SuiteReport, hosts: list[tuple[Multigraph, int]]) -> None:
    """Drop one colored edge from a maximal M and record which lemma
    verifiers notice.  Failures here are expected and do not count."""
    for g, k in hosts:
        for m in all_maximal_subgraphs(g, k):
            if m.num_edges == 0:
                continue
            cert = certificate_for(g, k, m)
            e = min(cert.coloring.colors)
            col = cert.coloring.uncolor([e])
            weak = MaximalSubgraphCertificate(col, tuple(cert.uncolored) + (e,),
                                              tuple(cert.evidence) + (False,))
            fails: list[str] = []
            for y in g.vertices:
                if col.d_M(y) < k and local_sets(weak, y)[1]:
                    verify_lemma_oy(weak, y, fails)
                    verify_lemma_path(weak, y, fails)
                    verify_lemma_disjoint(weak, y, fails)
            simple = check_theorem_simple(weak, observational=True)
            if fails:
                rep.expected_failures.append(_cert_record(
                    weak, removed=list(e), lemma_failures=fails,
                    theorem_simple_violations=len(simple.violations)))
                return


def _exhaustive_chunk(n: int, max_mult: int, k: int, lo: int, hi: int,
                      theorems, kostochka: bool) -> SuiteReport:
    rep = SuiteReport("chunk", {})
    for g in corpus.multigraphs_up_to_iso(n, max_mult)[lo:hi]:
        for m in all_maximal_subgraphs(g, k):
            rep.count("maximal_subgraphs")
            _check_cert(certificate_for(g, k, m), rep, theorems, kostochka)
    return rep


def merge_into(rep: SuiteReport, part: SuiteReport) -> None:
    """Fold a worker's partial report in; callers merge in canonical order."""
    for name, (p, f) in part.checks.items():
        row = rep.checks.setdefault(name, [0, 0])
        row[0] += p
        row[1] += f
    rep.records += part.records
    rep.expected_failures += part.expected_failures
    for key, val in part.notes.items():
        rep.count(key, val)


def _run_chunks(jobs: list[tuple], workers: int) -> list[SuiteReport]:
    if workers <= 1:
        return [_exhaustive_chunk(*job) for job in jobs]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(_exhaustive_chunk, *zip(*jobs)))


def exhaustive_deficiency(max_n: int = 5, max_mult: int = 2, ks=(1, 2, 3, 4),
                          theorems=("simple",), kostochka: bool = False,
                          min_n: int = 1, workers: int = 1,
                          progress: Callable[[str], None] | None = None) -> SuiteReport:
    """Every maximal k-colorable M of every multigraph (up to isomorphism).

    ``workers`` only changes wall time: chunks are merged in input order.
    """
    rep = SuiteReport("exhaustive", {"max_n": max_n, "max_mult": max_mult, "ks": list(ks),
                                     "theorems": list(theorems), "kostochka": kostochka})
    chunk = 16
    for n in range(min_n, max_n + 1):
        count = len(corpus.multigraphs_up_to_iso(n, max_mult))
        rep.count("graphs", count)
        for k in ks:
            jobs = [(n, max_mult, k, lo, lo + chunk, tuple(theorems), kostochka)
                    for lo in range(0, count, chunk)]
            for part in _run_chunks(jobs, workers):
                merge_into(rep, part)
            if progress:
                progress(f"n={n} k={k} checks={rep.passed + rep.failed} failed={rep.failed}")
    if kostochka:
        _negative_control(rep, [(corpus.multigraphs_up_to_iso(2, 1)[-1], 1)]
                          + [(g, 2) for g in corpus.multigraphs_up_to_iso(4, 1)])
        rep.notes["negative_control_failures"] = len(rep.expected_failures)
    return rep


def random_deficiency(seed: int = 7, trials: int = 500, max_n: int = 8, max_mult: int = 3,
                      max_k: int = 5, theorems=("main",), kostochka: bool = False,
                      audit: bool = True) -> SuiteReport:
    """Seeded multigraphs with a maximal M grown in a shuffled edge order."""
    rep = SuiteReport("random", {"seed": seed, "trials": trials, "max_n": max_n,
                                 "max_mult": max_mult, "max_k": max_k,
                                 "theorems": list(theorems), "kostochka": kostochka})
    for i in range(trials):
        g = corpus.random_instance(seed, i, max_n, max_mult)
        rng = corpus.instance_rng(seed, trials + i)
        k = rng.randint(1, max_k)
        order = shuffled_order(g, rng.randrange(2 ** 31))
        cert = maximal_colorable_subgraph(g, k, order)
        if audit:
            rep.add("certificate_audit", audit_certificate(cert), _cert_record(cert))
        _check_cert(cert, rep, theorems, kostochka)
        rep.count("instances")
    return rep


# -- colorers ----------------------------------------------------------------

def _colorer_case(g: Multigraph, rep: SuiteReport, tel: Telemetry) -> None:
    s = degree_stats(g)
    for name, fn, bound in (("vizing", color_vizing, s.delta + s.mu),
                            ("ore", color_ore, s.d_mu_max)):
        c = fn(g, tel)
        ok = is_proper(c) and c.is_total() and max(c.colors_used()) <= bound
        rep.add(name, ok, _graph_record(g, coloring=dumps_coloring(c)))


def colorer_bounds(seed: int = 11, trials: int = 300, max_n: int = 8,
                   max_mult: int = 3) -> SuiteReport:
    rep = SuiteReport("colorers", {"seed": seed, "trials": trials, "max_n": max_n,
                                   "max_mult": max_mult})
    tel = Telemetry()
    for i in range(trials):
        g = corpus.random_instance(seed, i, max_n, max_mult)
        if g.num_edges == 0:
            rep.count("edgeless_skipped")
            continue
        _colorer_case(g, rep, tel)
        rep.count("instances")
    rep.telemetry = tel.as_dict()
    return rep


def _forest_case(g: Multigraph, rep: SuiteReport, tel: Telemetry) -> None:
    s = degree_stats(g)
    stars = star_subgraphs(g)
    bf = stars.max_degree_mult.graph.num_edges == 0
    lp = g.is_simple() and is_forest(stars.max_degree.graph)
    if bf:
        rep.count("bf_graphs")
        c = color_forest_bound(g, tel) if check_star_forest_hypothesis(g) else color_ore(g, tel)
        rep.add("bf_bound", is_proper(c) and c.is_total()
                and max(c.colors_used()) <= s.delta + s.mu - 1, _graph_record(g))
    if not check_star_forest_hypothesis(g):
        return
    rep.count("hypothesis_graphs")
    if lp:
        rep.count("lp_graphs")
    used = None
    try:
        c = color_forest_bound(g, tel)
        used = max(c.colors_used())
        ok = is_proper(c) and c.is_total() and used <= s.d_mu_max - 1
        detail = dumps_coloring(c)
    except (HypothesisError, RuntimeError) as exc:
        ok, detail = False, str(exc)
    rep.add("forest_bound", ok, _graph_record(g, detail=detail))
    if bf:
        rep.add("forest_bound_bf", ok, _graph_record(g))
    if lp:
        rep.add("forest_bound_lp", ok and used <= s.delta, _graph_record(g))


def forest_bound_suite(seed: int = 13, trials: int = 400, max_n: int = 8,
                       max_mult: int = 3, exhaustive_simple_n: int = 7,
                       exhaustive_multi_n: int = 4) -> SuiteReport:
    rep = SuiteReport("forest", {"seed": seed, "trials": trials, "max_n": max_n,
                                 "max_mult": max_mult, "exhaustive_simple_n": exhaustive_simple_n,
                                 "exhaustive_multi_n": exhaustive_multi_n})
    tel = Telemetry()
    graphs: list[Multigraph] = []
    for n in range(2, exhaustive_simple_n + 1):
        graphs += corpus.simple_graphs(n)
    for n in range(2, exhaustive_multi_n + 1):
        graphs += corpus.multigraphs_up_to_iso(n, 2)
    for i in range(trials):
        graphs.append(corpus.random_instance(seed, i, max_n, max_mult))
        graphs.append(corpus.random_simple(seed, trials + i, max_n))
    for g in graphs:
        if g.num_edges:
            _forest_case(g, rep, tel)
    rep.telemetry = tel.as_dict()
    return rep


# -- joins, phi_k, alpha'_k ------------------------------------------------

def _join_case(h: Multigraph, k: int, rep: SuiteReport) -> None:
    inst = TuzaInstance(k, h)
    try:
        tau, nu = tau_nu_join(inst)
    except AssertionError as exc:
        rep.add("tau_le_2nu", False, _graph_record(h, k=k, detail=str(exc)))
        return
    g = inst.g
    cover = min_triangle_cover(g)
    packing = max_triangle_packing(g)
    rec = _graph_record(h, k=k, formula=[tau, nu], oracle=[len(cover), len(packing)])
    rep.add("nu_equal", nu == len(packing), rec)
    rep.add("tau_equal", tau == len(cover), rec)
    rep.add("tau_le_2nu", len(cover) <= 2 * len(packing), rec)
    rep.add("nu_le_tau_le_3nu", len(packing) <= len(cover) <= 3 * len(packing), rec)
    # oracle packing -> k-coloring of H, and oracle cover -> set D, as in the proof
    colors = packing_to_coloring(k, h, packing)
    rep.add("packing_roundtrip", _is_k_matching_union(h, k, colors) and len(colors) == nu,
            _graph_record(h, k=k, packing=[list(t) for t in packing]))
    D = cover_to_set(k, h, cover)
    back = set_to_cover(k, h, D)
    rep.add("cover_roundtrip", k * h.n - phi_value(h, k, D) <= len(cover)
            and len(back) == tau and is_triangle_free(_without(g, back)),
            _graph_record(h, k=k, cover=[list(e) for e in cover], D=list(D)))


def _without(g: Multigraph, pairs) -> Multigraph:
    for a, b in pairs:
        g = g.with_mult(a, b, 0)
    return g


def _is_k_matching_union(h: Multigraph, k: int, colors: dict) -> bool:
    seen = set()
    for (a, b), c in colors.items():
        if not (1 <= c <= k and h.mu(a, b)) or (a, c) in seen or (b, c) in seen:
            return False
        seen |= {(a, c), (b, c)}
    return True


def join_crossval(max_h: int = 6, ks=(1, 2, 3)) -> SuiteReport:
    rep = SuiteReport("join", {"max_h": max_h, "ks": list(ks)})
    hs = corpus.triangle_free_graphs(max_h)
    rep.notes["graph6"] = corpus.graph6_lines(hs)
    for h in hs:
        for k in ks:
            _join_case(h, k, rep)
            rep.count("instances")
    return rep


def _alphi_case(g: Multigraph, k: int, orders: list, subsets: list, rep: SuiteReport) -> None:
    res = check_alphi(g, k, orders)
    rec = _graph_record(g, k=k, orders=[list(map(list, o)) for o in orders],
                        alpha=res.alpha, phi=res.phi, maximal=res.maximal_sizes)
    rep.add("alpha_exact", 2 * res.alpha >= res.rhs, rec)
    rep.add("alpha_maximal", all(2 * m >= res.rhs for m in res.maximal_sizes), rec)
    if res.tight:
        rep.count("tight_cases")
    value, wit = phi_k(g, k)
    wrec = _graph_record(g, k=k, D=list(wit.D))
    rep.add("witness_value", wit.value == value, wrec)
    rep.add("witness_k_dependent", wit.k_dependent, wrec)
    rep.add("witness_k_dominating", wit.k_dominating, wrec)
    for T in subsets:
        D = reduce_to_k_dependent(g, k, T)
        ok = (D <= set(T) and is_k_dependent(g, k, D)
              and phi_value(g, k, D) >= phi_value(g, k, T))
        rep.add("reduction_monotone", ok, _graph_record(g, k=k, T=list(T), D=sorted(D)))


def alphi_suite(seed: int = 17, trials: int = 200, max_n: int = 10, max_k: int = 3,
                orders: int = 3) -> SuiteReport:
    """``2 alpha'_k >= k|V| - phi_k`` and k-optimal set properties."""
    rep = SuiteReport("alphi", {"seed": seed, "trials": trials, "max_n": max_n,
                                "max_k": max_k, "orders": orders})
    for i in range(trials):
        g = corpus.random_simple(seed, i, max_n)
        rng = corpus.instance_rng(seed, trials + i)
        k = rng.randint(1, max_k)
        ords = [shuffled_order(g, rng.randrange(2 ** 31)) for _ in range(orders)]
        subsets = [[v for v in g.vertices if rng.random() < 0.6] for _ in range(3)]
        _alphi_case(g, k, ords, subsets, rep)
        rep.count("instances")
    return rep


# -- adjacency lemma ---------------------------------------------------------

def _val_case(g: Multigraph, x: int, y: int, rep: SuiteReport) -> None:
    r = val_check(g, x, y)
    rep.add("val", r.holds, _graph_record(g, x=x, y=y, bound=r.bound, count=r.count,
                                          derived=r.derived))


def val_suite(max_n: int = 6, min_n: int = 2) -> SuiteReport:
    rep = SuiteReport("val", {"max_n": max_n})
    for n in range(min_n, max_n + 1):
        for g in corpus.simple_graphs(n):
            if g.num_edges == 0:
                continue
            if chromatic_index(g) != max_degree(g) + 1:
                continue
            rep.count("class2_graphs")
            for x, y in critical_edges(g):
                _val_case(g, x, y, rep)
                _val_case(g, y, x, rep)
    return rep


# -- conjecture sweep ------------------------------------------------------

def _conjecture_case(g: Multigraph, k: int, rep: SuiteReport) -> list[str]:
    res = conjecture_kcover_search(g, k)
    rep.count("optimal_sets", len(res.optimal_sets))
    for D, dcs in res.degree_subgraphs.items():
        rep.add("degree_subgraph", dcs is not None, _graph_record(g, k=k, D=list(D)))
    if k == 1:
        rep.add("cover_matching", not res.counterexample, _graph_record(g, k=k))
    return res.candidates


def conjecture_sweep(max_n: int = 7, ks=(1, 2), min_n: int = 1,
                     progress: Callable[[str], None] | None = None) -> SuiteReport:
    """Never fails on a candidate: candidates are the headline, not an error.

    The only hard checks are the weaker degree-constrained statement and the
    k=1 case, both of which are theorems."""
    rep = SuiteReport("conjecture", {"max_n": max_n, "ks": list(ks)})
    candidates: list[str] = []
    for n in range(min_n, max_n + 1):
        graphs = corpus.simple_graphs(n)
        for k in ks:
            for g in graphs:
                candidates += _conjecture_case(g, k, rep)
            if progress:
                progress(f"n={n} k={k} graphs={len(graphs)} candidates={len(candidates)}")
    rep.notes["candidates"] = candidates
    rep.notes["headline"] = (f"{len(candidates)} counterexample candidate(s)" if candidates
                             else "no counterexample")
    return rep


# -- replay ----------------------------------------------------------------

_CERT_CHECKS = {
    "certified": ((), False), "theorem_simple": (("simple",), False),
    "theorem_main": (("main",), False), "corollary_maxdelta": (("maxdelta",), False),
    "definitions": (("structure",), False), "small_k_structure": (("structure",), False),
    "lemma_oy": ((), True), "lemma_path": ((), True), "lemma_disjoint": ((), True),
    "certificate_invariants": ((), True), "slack_crosscheck": ((), True),
}


def replay(record: dict) -> bool:
    """Re-run the single check behind a failure record; True if it still fails."""
    check = record["check"]
    g = loads(record["graph"])
    rep = SuiteReport("replay", {})
    if check in _CERT_CHECKS or check == "certificate_audit":
        cert = certificate_from_coloring(loads_coloring(record["coloring"], g))
        if check == "certificate_audit":
            rep.add(check, audit_certificate(cert))
        else:
            theorems, kost = _CERT_CHECKS[check]
            _check_cert(cert, rep, theorems, kost)
    elif check in ("vizing", "ore"):
        _colorer_case(g, rep, Telemetry())
    elif check.startswith("forest_bound") or check == "bf_bound":
        _forest_case(g, rep, Telemetry())
    elif check in ("nu_equal", "tau_equal", "tau_le_2nu", "nu_le_tau_le_3nu",
                   "packing_roundtrip", "cover_roundtrip"):
        _join_case(g, record["k"], rep)
    elif check in ("alpha_exact", "alpha_maximal") or check.startswith("witness_"):
        orders = [[tuple(e) for e in o] for o in record.get("orders", [])]
        _alphi_case(g, record["k"], orders, [], rep)
    elif check == "reduction_monotone":
        _alphi_case(g, record["k"], [], [record["T"]], rep)
    elif check == "val":
        _val_case(g, record["x"], record["y"], rep)
    elif check in ("degree_subgraph", "cover_matching"):
        _conjecture_case(g, record["k"], rep)
    else:
        raise ValueError(f"no replay for check {check!r}")
    return rep.checks.get(check, [0, 0])[1] > 0


def replay_candidate(line: str) -> bool:
    """True if a conjecture candidate record still has no k-cover witness."""
    rec = json.loads(line)
    return bool(_conjecture_case(loads(rec["graph"]), rec["k"], SuiteReport("replay", {})))


RUNNERS: dict[str, Callable[..., SuiteReport]] = {
    "exhaustive": exhaustive_deficiency,
    "random": random_deficiency,
    "colorers": colorer_bounds,
    "forest": forest_bound_suite,
    "join": join_crossval,
    "alphi": alphi_suite,
    "val": val_suite,
    "conjecture": conjecture_sweep,
}
