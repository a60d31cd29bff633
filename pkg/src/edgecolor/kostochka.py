"""Auxiliary digraphs around a deficient vertex, and the lemmas they support.

Fix a certified maximal ``M`` with coloring ``psi`` and a vertex ``y`` with
``d_M(y) < k``.  For each ``u`` in ``U^k(y)`` the digraph ``H_u`` lives on
``N_M(y) + {u}`` and has ``|O(w) & psi(y, z)|`` arcs from ``w`` to ``z``.
Neighbors unreachable in every ``H_u`` are *remote*; the color certificate
``C(w)`` is ``psi(y, w)`` for remote ``w`` and ``O(w)`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import kempe_path_from
from .deficiency import local_sets
from .exact import MaximalSubgraphCertificate


@dataclass(frozen=True)
class AuxDigraph:
    y: int
    u: int
    vertices: tuple[int, ...]
    arcs: dict[tuple[int, int], int]   # only positive multiplicities

    def out_neighbors(self, w: int) -> list[int]:
        return [z for (a, z) in self.arcs if a == w]


@dataclass(frozen=True)
class CertificateMap:
    y: int
    remote: frozenset[int]
    C: dict[int, frozenset[int]]
    observation_ok: bool   # remote z in F^k(y) has every yz edge colored


def _deficient(cert: MaximalSubgraphCertificate, y: int) -> None:
    if cert.coloring.d_M(y) >= cert.k:
        raise ValueError(f"vertex {y} has d_M = k; nothing is missing there")


def build_aux(cert: MaximalSubgraphCertificate, y: int, u: int) -> AuxDigraph:
    _deficient(cert, y)
    _, Uk, _ = local_sets(cert, y)
    if u not in Uk:
        raise ValueError(f"{u} is not in U^k({y})")
    col = cert.coloring
    verts = tuple(sorted(col.neighbors_M(y) | {u}))
    missing = {w: col.missing(w) for w in verts}
    at_y = {z: col.between(y, z) for z in verts}
    arcs = {}
    for w in verts:
        for z in verts:
            if w != z:
                m = len(missing[w] & at_y[z])
                if m:
                    arcs[(w, z)] = m
    return AuxDigraph(y, u, verts, arcs)


def reachable(h: AuxDigraph) -> set[int]:
    """Vertices with a directed path from ``u`` (``u`` included)."""
    seen = {h.u}
    stack = [h.u]
    while stack:
        w = stack.pop()
        for z in h.out_neighbors(w):
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def _aux_all(cert, y):
    _deficient(cert, y)
    _, Uk, _ = local_sets(cert, y)
    return [build_aux(cert, y, u) for u in sorted(Uk)]


def remote_vertices(cert: MaximalSubgraphCertificate, y: int) -> set[int]:
    hit: set[int] = set()
    for h in _aux_all(cert, y):
        hit |= reachable(h)
    return cert.coloring.neighbors_M(y) - hit


def certificates(cert: MaximalSubgraphCertificate, y: int) -> CertificateMap:
    col, g = cert.coloring, cert.graph
    remote = remote_vertices(cert, y)
    Fk, Uk, _ = local_sets(cert, y)
    observation_ok = all(col.mu_M(y, z) == g.mu(y, z) for z in remote & Fk)
    C = {}
    for w in sorted(Uk | col.neighbors_M(y) | {y}):
        C[w] = frozenset(col.between(y, w) if w in remote else col.missing(w))
    return CertificateMap(y, frozenset(remote), C, observation_ok)


def certificate_invariants(cert: MaximalSubgraphCertificate, y: int) -> list[str]:
    """Failed invariants of the certificate map at ``y`` (empty when sound)."""
    cm = certificates(cert, y)
    col, g, k = cert.coloring, cert.graph, cert.k
    Fk, Uk, _ = local_sets(cert, y)
    bad = []
    if not cm.observation_ok:
        bad.append("remote deficient neighbor with an uncolored edge to y")
    if cm.C[y] != frozenset(col.missing(y)) or len(cm.C[y]) != k - col.d_M(y):
        bad.append("C(y) != O(y)")
    for z in sorted(Fk):
        if len(cm.C[z]) < g.mu(z, y):
            bad.append(f"|C({z})| < mu({z},{y})")
        if z in cm.remote and z in Uk:
            bad.append(f"remote {z} lies in U^k")
    return bad


def verify_lemma_oy(cert: MaximalSubgraphCertificate, y: int,
                    failures: list[str] | None = None) -> bool:
    """Every vertex reachable from ``u`` in ``H_u`` shares no missing color with ``y``."""
    col = cert.coloring
    oy = col.missing(y)
    ok = True
    for h in _aux_all(cert, y):
        for v in sorted(reachable(h)):
            if col.missing(v) & oy:
                ok = False
                if failures is not None:
                    failures.append(f"oy: y={y} u={h.u} v={v}")
    return ok


def verify_lemma_path(cert: MaximalSubgraphCertificate, y: int,
                      failures: list[str] | None = None) -> bool:
    """For reachable ``v``, ``alpha`` missing at ``y`` and ``beta`` missing at
    ``v``, the maximal alternating path from ``y`` ends at ``v``."""
    col = cert.coloring
    oy = sorted(col.missing(y))
    ok = True
    for h in _aux_all(cert, y):
        for v in sorted(reachable(h)):
            for a in oy:
                for b in sorted(col.missing(v)):
                    if a == b or kempe_path_from(col, y, a, b).end != v:
                        ok = False
                        if failures is not None:
                            failures.append(f"path: y={y} u={h.u} v={v} a={a} b={b}")
    return ok


def verify_lemma_disjoint(cert: MaximalSubgraphCertificate, y: int,
                          failures: list[str] | None = None) -> bool:
    """Certificates on ``N_M(y) + {y}`` are pairwise disjoint, and those on
    ``F^k(y)`` fit in the colors not in ``C(y)``."""
    cm = certificates(cert, y)
    col = cert.coloring
    dom = sorted(col.neighbors_M(y) | {y})
    ok = True
    for w, z in combinations(dom, 2):
        if cm.C[w] & cm.C[z]:
            ok = False
            if failures is not None:
                failures.append(f"disjoint: y={y} w={w} z={z}")
    Fk, _, _ = local_sets(cert, y)
    if sum(len(cm.C[z]) for z in Fk) > cert.k - len(cm.C[y]):
        ok = False
        if failures is not None:
            failures.append(f"aggregate: y={y}")
    return ok


def certificate_slack(cert: MaximalSubgraphCertificate, y: int) -> int:
    """Slack of the local deficiency bound at ``y`` recomputed from the
    certificate sizes: ``k - |C(y)| - sum_U (|C(z)| - mu(z, y)) - d_{F^k}(y)``."""
    cm = certificates(cert, y)
    g = cert.graph
    _, Uk, dF = local_sets(cert, y)
    return cert.k - len(cm.C[y]) - sum(len(cm.C[z]) - g.mu(z, y) for z in Uk) - dF


def dump_aux(cert: MaximalSubgraphCertificate, y: int) -> str:
    """Debug text: one block per ``H_u`` (``arc w z mult``), then ``remote``
    and ``cert`` lines."""
    lines = []
    for h in _aux_all(cert, y):
        lines.append(f"# H_u y={y} u={h.u}")
        lines += [f"arc {w} {z} {m}" for (w, z), m in sorted(h.arcs.items())]
    cm = certificates(cert, y)
    lines += [f"remote {z}" for z in sorted(cm.remote)]
    for w, cs in cm.C.items():
        lines.append(f"cert {w} {{{','.join(map(str, sorted(cs)))}}}")
    return "\n".join(lines) + "\n"
