"""Exact k-edge-colorability, chromatic index, and maximal k-colorable subgraphs.

The decision procedure is a complete backtracking search over parallel
classes.  Symmetry is broken twice: copies of one class take strictly
increasing colors, and a branch may open at most one never-used color.
Branching picks the class with the fewest admissible colors.  Hard negative
instances are additionally screened with the odd-set density bound
``|E(G[S])| <= k * (|S| - 1) / 2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .coloring import PartialColoring
from .graph import Edge, Multigraph

_SCREEN_AFTER = 4000  # search nodes before the density screen kicks in
_SCREEN_MAX_N = 14


class _Budget(Exception):
    pass


def _density_violated(mult: tuple[tuple[int, ...], ...], k: int) -> bool:
    """True if some odd vertex set spans more than ``k*(|S|-1)/2`` edges."""
    n = len(mult)
    if n > _SCREEN_MAX_N:
        return False
    size = 1 << n
    edges_in = [0] * size
    pop = [0] * size
    for s in range(1, size):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        pop[s] = pop[rest] + 1
        row = mult[low]
        extra = 0
        r = rest
        while r:
            b = (r & -r).bit_length() - 1
            extra += row[b]
            r &= r - 1
        edges_in[s] = edges_in[rest] + extra
        if pop[s] & 1 and pop[s] >= 3 and 2 * edges_in[s] > k * (pop[s] - 1):
            return True
    return False


def _search(mult: tuple[tuple[int, ...], ...], k: int, limit: int | None):
    """Backtracking core.  Returns ``{(v, w): [colors]}`` or None; raises
    ``_Budget`` if ``limit`` nodes are exceeded."""
    n = len(mult)
    pairs = [(v, w, mult[v][w]) for v, w in combinations(range(n), 2) if mult[v][w]]
    deg = [sum(r) for r in mult]
    # ties broken by decreasing endpoint-degree sum, then pair order
    pairs.sort(key=lambda p: (-(deg[p[0]] + deg[p[1]]), p[0], p[1]))
    full = (1 << k) - 1
    used = [0] * n
    left = [m for _, _, m in pairs]
    last = [-1] * len(pairs)          # last color index given to this class
    assigned: list[list[int]] = [[] for _ in pairs]
    remaining = sum(left)
    nodes = 0

    def solve(remaining: int, maxused: int) -> bool:
        nonlocal nodes
        if remaining == 0:
            return True
        nodes += 1
        if limit is not None and nodes > limit:
            raise _Budget
        open_mask = (1 << min(maxused + 2, k)) - 1
        best = -1
        best_mask = 0
        best_count = k + 1
        for i, (v, w, _) in enumerate(pairs):
            if not left[i]:
                continue
            mask = ~(used[v] | used[w]) & full & ~((1 << (last[i] + 1)) - 1)
            cnt = bin(mask).count("1")
            if cnt < left[i]:
                return False
            cnt_open = bin(mask & open_mask).count("1")
            if cnt_open < best_count:
                best, best_mask, best_count = i, mask & open_mask, cnt_open
                if cnt_open == 0:
                    return False
        v, w, _ = pairs[best]
        prev = last[best]
        m = best_mask
        while m:
            bit = m & -m
            m ^= bit
            c = bit.bit_length() - 1
            used[v] |= bit
            used[w] |= bit
            left[best] -= 1
            last[best] = c
            assigned[best].append(c)
            if solve(remaining - 1, max(maxused, c)):
                return True
            assigned[best].pop()
            last[best] = prev
            left[best] += 1
            used[v] ^= bit
            used[w] ^= bit
        return False

    if not solve(remaining, -1):
        return None
    return {(v, w): [c + 1 for c in assigned[i]] for i, (v, w, _) in enumerate(pairs)}


@lru_cache(maxsize=400_000)
def _decide(mult: tuple[tuple[int, ...], ...], k: int):
    deg = [sum(r) for r in mult]
    total = sum(deg) // 2
    if total == 0:
        return ()
    if k < 1 or max(deg) > k:
        return None
    active = sum(1 for d in deg if d)
    if total > k * (active // 2):
        return None
    try:
        sol = _search(mult, k, _SCREEN_AFTER)
    except _Budget:
        if _density_violated(mult, k):
            return None
        sol = _search(mult, k, None)
    if sol is None:
        return None
    return tuple(sorted(((v, w), tuple(cs)) for (v, w), cs in sol.items()))


def decide_k_colorable(g: Multigraph, k: int) -> PartialColoring | None:
    """A total proper k-edge-coloring of ``g``, or None if none exists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    sol = _decide(g.mult, k)
    if sol is None:
        return None
    colors = {(v, w, i): c for (v, w), cs in sol for i, c in enumerate(cs)}
    return PartialColoring(g, k, colors)


def is_k_colorable(g: Multigraph, k: int) -> bool:
    return _decide(g.mult, k) is not None


def chromatic_index(g: Multigraph) -> int:
    """Least k admitting a proper k-edge-coloring; 0 for an edgeless graph."""
    if g.num_edges == 0:
        return 0
    k = max(g.degrees())
    while not is_k_colorable(g, k):
        k += 1
    return k


def lift(sub: PartialColoring, host: Multigraph,
         copies: dict[tuple[int, int], Sequence[int]] | None = None) -> dict[Edge, int]:
    """Rename a coloring of a sub-multigraph onto host instances.

    ``copies[(v, w)]`` lists the host copy indices that the sub-multigraph's
    copies ``0, 1, ...`` stand for; identity by default.
    """
    out = {}
    for (v, w, i), c in sub.colors.items():
        j = copies[(v, w)][i] if copies is not None else i
        out[(v, w, j)] = c
    return out


def _sub_from_edges(host: Multigraph, edges: Iterable[Edge]):
    rows = [[0] * host.n for _ in range(host.n)]
    copies: dict[tuple[int, int], list[int]] = {}
    for v, w, c in edges:
        rows[v][w] += 1
        rows[w][v] += 1
        copies.setdefault((v, w), []).append(c)
    for lst in copies.values():
        lst.sort()
    return Multigraph(host.n, tuple(tuple(r) for r in rows)), copies


def color_edge_set(host: Multigraph, edges: Iterable[Edge], k: int) -> dict[Edge, int] | None:
    """Exact proper k-coloring of an arbitrary set of host instances, or None."""
    sub, copies = _sub_from_edges(host, edges)
    col = decide_k_colorable(sub, k)
    if col is None:
        return None
    return lift(col, host, copies)


# -- maximal k-colorable subgraphs -------------------------------------------

@dataclass(frozen=True)
class MaximalSubgraphCertificate:
    """A k-colorable ``M`` (the colored part of ``coloring``) with the record
    of why no remaining host edge fits.

    ``evidence[i]`` is True when ``M + uncolored[i]`` was decided not
    k-colorable by the exact procedure.  ``certified`` is True only when every
    flag is set; greedy-mode results carry False flags.
    """
    coloring: PartialColoring
    uncolored: tuple[Edge, ...]
    evidence: tuple[bool, ...]
    order: tuple[Edge, ...] = ()

    @property
    def graph(self) -> Multigraph:
        return self.coloring.graph

    @property
    def k(self) -> int:
        return self.coloring.k

    @property
    def certified(self) -> bool:
        return all(self.evidence)

    def m_graph(self) -> Multigraph:
        return self.coloring.subgraph()


def _greedy_free(col: dict[Edge, int], at: list[dict[int, Edge]], e: Edge, k: int) -> int | None:
    v, w, _ = e
    for c in range(1, k + 1):
        if c not in at[v] and c not in at[w]:
            return c
    return None


def maximal_colorable_subgraph(g: Multigraph, k: int, order: Sequence[Edge] | None = None,
                               mode: str = "certificate") -> MaximalSubgraphCertificate:
    """Greedy maximal k-colorable subgraph in the given edge order.

    In ``"certificate"`` mode an edge is rejected only after the exact decision
    procedure says ``M + e`` is not k-colorable; since colorability is
    hereditary and ``M`` only grows, every rejection stays valid for the final
    ``M``.  ``"greedy"`` mode uses free colors and Kempe augmentation only.
    """
    from .colorers import Telemetry, augment_edge

    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in ("certificate", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    order = tuple(g.edges() if order is None else order)
    if sorted(order) != g.edges():
        raise ValueError("order must be a permutation of the edge instances")
    col: dict[Edge, int] = {}
    rejected: list[Edge] = []
    flags: list[bool] = []
    scratch = Telemetry()
    for e in order:
        if augment_edge(g, k, col, e, scratch):
            continue
        if mode == "greedy":
            rejected.append(e)
            flags.append(False)
            continue
        new = color_edge_set(g, list(col) + [e], k)
        if new is None:
            rejected.append(e)
            flags.append(True)
        else:
            col = new
    return MaximalSubgraphCertificate(PartialColoring(g, k, col), tuple(rejected),
                                      tuple(flags), order)


def shuffled_order(g: Multigraph, seed: int) -> list[Edge]:
    order = g.edges()
    random.Random(seed).shuffle(order)
    return order


def audit_certificate(cert: MaximalSubgraphCertificate) -> bool:
    """Re-decide ``M + e`` for every uncolored edge against the final ``M``."""
    g = cert.graph
    M = list(cert.coloring.colors)
    if set(M) | set(cert.uncolored) != set(g.edges()) or set(M) & set(cert.uncolored):
        return False
    seen = set()
    for e in cert.uncolored:
        if e[:2] in seen:  # parallel copies give the same M + e
            continue
        seen.add(e[:2])
        if color_edge_set(g, M + [e], cert.k) is not None:
            return False
    return True


def certificate_for(g: Multigraph, k: int, m: Multigraph) -> MaximalSubgraphCertificate:
    """Certificate for a given sub-multiplicity table ``m`` of ``g``.

    ``M`` takes copies ``0..m(v,w)-1`` of each pair.  Raises ValueError if
    ``m`` is not k-colorable; the evidence flags report maximality.
    """
    col = decide_k_colorable(m, k)
    if col is None:
        raise ValueError("subgraph is not k-colorable")
    uncolored = []
    flags = []
    for v, w, gm in g.pairs():
        mm = m.mult[v][w]
        if mm > gm:
            raise ValueError("m is not a subgraph of g")
        if mm < gm:
            bad = not is_k_colorable(m.add_edge(v, w), k)
            for c in range(mm, gm):
                uncolored.append((v, w, c))
                flags.append(bad)
    return MaximalSubgraphCertificate(PartialColoring(g, k, dict(col.colors)),
                                      tuple(uncolored), tuple(flags))


def certificate_from_coloring(col: PartialColoring) -> MaximalSubgraphCertificate:
    """Rebuild a certificate around a stored coloring (used when replaying
    records); evidence is decided afresh against that coloring's ``M``."""
    g, k = col.graph, col.k
    M = list(col.colors)
    uncolored = tuple(col.uncolored_edges())
    verdict: dict = {}
    flags = []
    for e in uncolored:
        if e[:2] not in verdict:
            verdict[e[:2]] = color_edge_set(g, M + [e], k) is None
        flags.append(verdict[e[:2]])
    return MaximalSubgraphCertificate(col, uncolored, tuple(flags))


def all_maximal_subgraphs(g: Multigraph, k: int) -> list[Multigraph]:
    """Every maximal k-colorable sub-multigraph of ``g`` (as multiplicity tables).

    Parallel copies are interchangeable, so ``M`` is identified with its
    multiplicity table.  Enumeration walks the pairs in order, pruning any
    partial table that is already not k-colorable.
    """
    pairs = g.pairs()
    n = g.n
    rows = [[0] * n for _ in range(n)]
    out: list[Multigraph] = []

    def table():
        return tuple(tuple(r) for r in rows)

    def rec(i: int):
        if i == len(pairs):
            cur = table()
            for v, w, gm in pairs:
                if rows[v][w] < gm:
                    rows[v][w] += 1
                    rows[w][v] += 1
                    ext = _decide(table(), k) is not None
                    rows[v][w] -= 1
                    rows[w][v] -= 1
                    if ext:
                        return
            out.append(Multigraph(n, cur))
            return
        v, w, gm = pairs[i]
        for c in range(gm + 1):
            rows[v][w] = rows[w][v] = c
            if c and _decide(table(), k) is None:
                break
            rec(i + 1)
        rows[v][w] = rows[w][v] = 0

    rec(0)
    return out
