"""Deficient vertex sets of a maximal k-colorable subgraph and their verifiers.

Given a certified maximal ``M`` with coloring ``psi``:

* ``F = {v : d_M(v) <= k - mu(v)}`` is the global deficient set, and every
  ``v`` with ``d_M(v) < k`` must satisfy ``d_F(v) <= d_M(v)``;
* ``F^k(v) = {w in N(v) : d_M(w) <= k - mu(v, w)}`` and its subset ``U^k(v)``
  of neighbors still joined to ``v`` by an uncolored edge give the sharper
  bound ``d_{F^k(v)}(v) <= d_M(v) - sum_{w in U^k(v)} (k - d_M(w) - mu(v, w))``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .coloring import dumps_coloring
from .exact import (MaximalSubgraphCertificate, all_maximal_subgraphs,
                    certificate_for, chromatic_index, decide_k_colorable)
from .graph import Multigraph, dumps, induced, max_degree, mu_vertex


class CertificateError(ValueError):
    """Verifier was given a subgraph that is not certified maximal."""


class PreconditionError(ValueError):
    """Inputs fall outside the statement being checked (not a falsification)."""


@dataclass(frozen=True)
class VertexRecord:
    v: int
    d_M: int
    F_k: tuple[int, ...]
    U_k: tuple[int, ...]
    dF_local: int          # edges from v into F^k(v)
    d_F: int               # edges from v into the global F
    u_sum: int
    simple_slack: int      # d_M - d_F
    main_slack: int        # d_M - u_sum - dF_local


@dataclass(frozen=True)
class FalsificationRecord:
    """Replayable description of a failed inequality."""
    check: str
    graph: str             # repo text format
    k: int
    coloring: str          # repo coloring format
    vertex: int
    slack: int
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass
class DeficiencyReport:
    k: int
    F: tuple[int, ...]
    records: list[VertexRecord] = field(default_factory=list)
    violations: list[FalsificationRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"k": self.k, "F": list(self.F),
                "records": [asdict(r) for r in self.records],
                "violations": [asdict(r) for r in self.violations]}


def _require_certified(cert: MaximalSubgraphCertificate, observational: bool) -> None:
    if not observational and not cert.certified:
        raise CertificateError("verifier needs a certificate-grade maximal subgraph")


def global_deficient_set(cert: MaximalSubgraphCertificate) -> set[int]:
    g, col, k = cert.graph, cert.coloring, cert.k
    return {v for v in g.vertices if col.d_M(v) <= k - mu_vertex(g, v)}


def local_sets(cert: MaximalSubgraphCertificate, v: int) -> tuple[set[int], set[int], int]:
    """``(F^k(v), U^k(v), d_{F^k(v)}(v))``."""
    g, col, k = cert.graph, cert.coloring, cert.k
    Fk = {w for w in g.neighbors(v) if col.d_M(w) <= k - g.mu(v, w)}
    Uk = {w for w in Fk if col.mu_M(v, w) < g.mu(v, w)}
    return Fk, Uk, g.d_set(v, Fk)


def _record(cert: MaximalSubgraphCertificate, v: int, F: set[int]) -> VertexRecord:
    g, col, k = cert.graph, cert.coloring, cert.k
    Fk, Uk, dFl = local_sets(cert, v)
    dM = col.d_M(v)
    u_sum = sum(k - col.d_M(w) - g.mu(v, w) for w in Uk)
    dF = g.d_set(v, F)
    return VertexRecord(v, dM, tuple(sorted(Fk)), tuple(sorted(Uk)), dFl, dF,
                        u_sum, dM - dF, dM - u_sum - dFl)


def _falsify(cert, check: str, v: int, slack: int, note: str = "") -> FalsificationRecord:
    return FalsificationRecord(check, dumps(cert.graph), cert.k,
                               dumps_coloring(cert.coloring), v, slack, note)


def deficiency_report(cert: MaximalSubgraphCertificate) -> DeficiencyReport:
    """Records for every vertex with ``d_M(v) < k``; no assertions."""
    F = global_deficient_set(cert)
    rep = DeficiencyReport(cert.k, tuple(sorted(F)))
    for v in cert.graph.vertices:
        if cert.coloring.d_M(v) < cert.k:
            rep.records.append(_record(cert, v, F))
    return rep


def check_theorem_simple(cert: MaximalSubgraphCertificate,
                         observational: bool = False) -> DeficiencyReport:
    """``d_F(v) <= d_M(v)`` at every ``v`` with ``d_M(v) < k``."""
    _require_certified(cert, observational)
    rep = deficiency_report(cert)
    for r in rep.records:
        if r.simple_slack < 0:
            rep.violations.append(_falsify(cert, "simple", r.v, r.simple_slack))
    return rep


def check_theorem_main(cert: MaximalSubgraphCertificate,
                       observational: bool = False) -> DeficiencyReport:
    """The local bound with the ``U^k`` correction, plus the pointwise
    comparison ``main_slack <= simple_slack``."""
    _require_certified(cert, observational)
    rep = deficiency_report(cert)
    for r in rep.records:
        if r.main_slack < 0:
            rep.violations.append(_falsify(cert, "main", r.v, r.main_slack))
        if r.main_slack > r.simple_slack:
            rep.violations.append(_falsify(cert, "main-vs-simple", r.v,
                                           r.simple_slack - r.main_slack,
                                           "local bound weaker than global bound"))
    return rep


def audit_definitions(cert: MaximalSubgraphCertificate) -> list[str]:
    """Structural identities of F, F^k, U^k; returns failed descriptions."""
    g, col, k = cert.graph, cert.coloring, cert.k
    F = global_deficient_set(cert)
    bad = []
    for v in g.vertices:
        Fk, Uk, _ = local_sets(cert, v)
        N = set(g.neighbors(v))
        if not Uk <= Fk <= N:
            bad.append(f"U/F/N nesting at {v}")
        if not (N & F) <= Fk:
            bad.append(f"N(v) & F not inside F^k at {v}")
        if any(k - col.d_M(w) - g.mu(v, w) < 0 for w in Uk):
            bad.append(f"negative U-term at {v}")
        untouched = all(col.mu_M(v, w) == g.mu(v, w) for w in N)
        if untouched and Uk:
            bad.append(f"U^k nonempty without uncolored edge at {v}")
        unc_nbrs = {w for w in N if col.mu_M(v, w) < g.mu(v, w)}
        if Uk != unc_nbrs & Fk:
            bad.append(f"U^k differs from uncolored neighbors in F^k at {v}")
    return bad


def check_corollary_maxdelta(cert: MaximalSubgraphCertificate) -> bool:
    """For simple G: the vertices of M-degree below k induce max degree <= k-1."""
    g = cert.graph
    if not g.is_simple():
        raise PreconditionError("corollary is stated for simple graphs")
    _require_certified(cert, False)
    F = [v for v in g.vertices if cert.coloring.d_M(v) < cert.k]
    if not F:
        return True
    return max_degree(induced(g, F)) <= cert.k - 1


def check_small_k_structure(cert: MaximalSubgraphCertificate) -> bool:
    """k=1: F independent.  k=2 (simple G): components of G[F] have at most
    two vertices, and M-isolated vertices are isolated in G[F]."""
    g, k = cert.graph, cert.k
    F = sorted(global_deficient_set(cert))
    sub = induced(g, F)
    if k == 1:
        return sub.num_edges == 0
    if k == 2 and g.is_simple():
        if any(sub.degree(i) > 1 for i in sub.vertices):
            return False
        return all(sub.degree(i) == 0 for i, v in enumerate(F) if cert.coloring.d_M(v) == 0)
    return True


def exhaustive_certificates(g: Multigraph, k: int) -> list[MaximalSubgraphCertificate]:
    """Certificates for every maximal k-colorable subgraph of ``g``."""
    return [certificate_for(g, k, m) for m in all_maximal_subgraphs(g, k)]


# -- adjacency lemma for simple graphs --------------------------------------

def critical_edges(g: Multigraph) -> list[tuple[int, int]]:
    """Pairs whose removal of one copy lowers the chromatic index."""
    chi = chromatic_index(g)
    return [(v, w) for v, w, _ in g.pairs() if chromatic_index(g.remove_edge(v, w)) < chi]


@dataclass(frozen=True)
class ValResult:
    x: int
    y: int
    chi: int
    t: int
    bound: int
    count: int            # neighbors z != x of y with d(z) = Delta
    derived: int          # |N(y) - F^k(y)| from the local bound on M = G - xy
    holds: bool


def val_check(g: Multigraph, x: int, y: int) -> ValResult:
    if not g.is_simple():
        raise PreconditionError("only simple graphs are handled")
    if not g.mu(x, y):
        raise PreconditionError(f"{x}{y} is not an edge")
    delta = max_degree(g)
    chi = chromatic_index(g)
    if chi != delta + 1:
        raise PreconditionError(f"chromatic index {chi} is not Delta+1 = {delta + 1}")
    M = g.remove_edge(x, y)
    col = decide_k_colorable(M, delta)
    if col is None:
        raise PreconditionError(f"{x}{y} is not critical")
    t = g.degree(x) + 1
    bound = chi - t + 1
    count = sum(1 for z in g.neighbors(y) if z != x and g.degree(z) == delta)
    cert = certificate_for(g, delta, M)
    rep = check_theorem_main(cert)
    Fk, Uk, _ = local_sets(cert, y)
    outside = set(g.neighbors(y)) - Fk
    derived = len(outside)
    holds = (count >= bound and derived >= bound and rep.ok and Uk == {x}
             and all(z != x and g.degree(z) == delta for z in outside))
    return ValResult(x, y, chi, t, bound, count, derived, holds)


def check_val_simple(g: Multigraph, x: int, y: int) -> bool:
    return val_check(g, x, y).holds
