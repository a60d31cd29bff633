"""Constructive colorers for the Delta+mu, Ore (D̄mu) and star-forest bounds.

All three grow a proper partial coloring one edge at a time.  An edge is
placed by :func:`augment_edge`: a free common color if there is one,
otherwise a multifan at one endpoint, shifted along its parent chain, with
Kempe swaps to create a shared missing color.  When augmentation gives up the
colorer falls back to the exact decision procedure and bumps a telemetry
counter; the bounds guarantee the fallback succeeds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .coloring import PartialColoring, other_end
from .exact import color_edge_set
from .graph import (Edge, Multigraph, d_mu_max, degree_stats, is_forest,
                    star_subgraphs)


@dataclass
class Telemetry:
    direct: int = 0        # edge took a free common color
    shifted: int = 0       # placed by a fan shift
    swaps: int = 0         # Kempe swaps performed
    gave_up: int = 0       # augmentation failures
    fallbacks: Counter = field(default_factory=Counter)  # exact fallbacks per colorer

    def as_dict(self) -> dict:
        return {"direct": self.direct, "shifted": self.shifted, "swaps": self.swaps,
                "gave_up": self.gave_up, "fallbacks": dict(sorted(self.fallbacks.items()))}


TELEMETRY = Telemetry()


class HypothesisError(ValueError):
    """Input does not satisfy the hypothesis of the requested bound."""


class _Work:
    def __init__(self, k: int, col: dict[Edge, int]):
        self.k = k
        self.col = col
        self.at: dict[int, dict[int, Edge]] = {}
        for e, c in col.items():
            self.at.setdefault(e[0], {})[c] = e
            self.at.setdefault(e[1], {})[c] = e

    def colors_at(self, v: int) -> dict[int, Edge]:
        return self.at.setdefault(v, {})

    def missing(self, v: int) -> set[int]:
        at = self.colors_at(v)
        return {c for c in range(1, self.k + 1) if c not in at}

    def set(self, e: Edge, c: int) -> None:
        self.col[e] = c
        self.colors_at(e[0])[c] = e
        self.colors_at(e[1])[c] = e

    def clear(self, e: Edge) -> None:
        c = self.col.pop(e)
        del self.at[e[0]][c]
        del self.at[e[1]][c]

    def chain(self, v: int, a: int, b: int) -> tuple[list[Edge], int]:
        """Maximal [a, b] path from ``v`` (``v`` must miss one of them)."""
        at = self.colors_at(v)
        nxt = a if a in at else b
        cur, edges = v, []
        while True:
            e = self.colors_at(cur).get(nxt)
            if e is None:
                return edges, cur
            edges.append(e)
            cur = other_end(e, cur)
            nxt = b if nxt == a else a

    def swap(self, edges: list[Edge], a: int, b: int) -> None:
        olds = [(e, self.col[e]) for e in edges]
        for e, _ in olds:
            self.clear(e)
        for e, c in olds:
            self.set(e, b if c == a else a)


def _fan(work: _Work, x: int, e0: Edge):
    """Maximal multifan at ``x`` seeded by the uncolored ``e0``.

    Each added edge ``x y_i`` carries a color missing at an earlier fan
    vertex ``y_parent[i]``.
    """
    verts = [other_end(e0, x)]
    edges = [e0]
    parent = [-1]
    miss = [work.missing(verts[0])]
    grown = True
    while grown:
        grown = False
        for c, e in sorted(work.colors_at(x).items()):
            z = other_end(e, x)
            if z in verts:
                continue
            for j, mj in enumerate(miss):
                if c in mj:
                    verts.append(z)
                    edges.append(e)
                    parent.append(j)
                    miss.append(work.missing(z))
                    grown = True
                    break
            if grown:
                break
    return verts, edges, parent, miss


def _shift(work: _Work, edges: list[Edge], parent: list[int], i: int, alpha: int) -> None:
    seq = [i]
    while parent[seq[-1]] != -1:
        seq.append(parent[seq[-1]])
    seq.reverse()  # 0 = seed, ..., i
    new = {}
    for a, b in zip(seq, seq[1:]):
        new[edges[a]] = work.col[edges[b]]
    new[edges[i]] = alpha
    for e in new:
        if e in work.col:
            work.clear(e)
    for e, c in new.items():
        work.set(e, c)


def _try_center(work: _Work, x: int, e0: Edge, tel: Telemetry) -> str:
    """Returns ``"done"``, ``"swapped"`` or ``"stuck"``."""
    ox = work.missing(x)
    if not ox:
        return "stuck"
    verts, edges, parent, miss = _fan(work, x, e0)
    for i, mi in enumerate(miss):
        common = ox & mi
        if common:
            _shift(work, edges, parent, i, min(common))
            tel.shifted += 1
            return "done"
    alpha = min(ox)
    for j in range(1, len(verts)):
        for i in range(j):
            common = miss[i] & miss[j]
            if not common:
                continue
            beta = min(common)
            for z in (verts[j], verts[i]):
                path, end = work.chain(z, alpha, beta)
                if end != x:
                    work.swap(path, alpha, beta)
                    tel.swaps += 1
                    return "swapped"
    return "stuck"


def augment_edge(g: Multigraph, k: int, col: dict[Edge, int], e: Edge,
                 tel: Telemetry | None = None) -> bool:
    """Try to color ``e`` (uncolored, in ``g``) by recoloring ``col`` in place.

    On failure ``col`` is still a proper coloring of the same edge set,
    possibly with some Kempe swaps applied.
    """
    tel = TELEMETRY if tel is None else tel
    work = _Work(k, col)
    v, w, _ = e
    free = work.missing(v) & work.missing(w)
    if free:
        work.set(e, min(free))
        tel.direct += 1
        return True
    for _ in range(2 * k + 4):
        progressed = False
        for x in (v, w):
            status = _try_center(work, x, e, tel)
            if status == "done":
                return True
            if status == "swapped":
                progressed = True
                free = work.missing(v) & work.missing(w)
                if free:
                    work.set(e, min(free))
                    return True
                break
        if not progressed:
            break
    tel.gave_up += 1
    return False


def extend(g: Multigraph, k: int, col: dict[Edge, int], edges, name: str,
           tel: Telemetry | None = None) -> dict[Edge, int]:
    """Add ``edges`` one at a time, with the exact fallback when augmentation
    fails.  Raises RuntimeError if even the exact procedure cannot fit one."""
    tel = TELEMETRY if tel is None else tel
    for e in edges:
        if augment_edge(g, k, col, e, tel):
            continue
        tel.fallbacks[name] += 1
        new = color_edge_set(g, list(col) + [e], k)
        if new is None:
            raise RuntimeError(f"{name}: {e} cannot be added with {k} colors")
        col = new
    return col


def _color_to(g: Multigraph, k: int, name: str, tel) -> PartialColoring:
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    col = extend(g, k, {}, g.edges(), name, tel)
    return PartialColoring(g, k, col)


def color_vizing(g: Multigraph, tel: Telemetry | None = None) -> PartialColoring:
    """Total proper coloring with at most Delta + mu colors."""
    s = degree_stats(g)
    return _color_to(g, s.delta + s.mu, "vizing", tel)


def color_ore(g: Multigraph, tel: Telemetry | None = None) -> PartialColoring:
    """Total proper coloring with at most max_v [d(v) + mu(v)] colors."""
    return _color_to(g, d_mu_max(g), "ore", tel)


def check_star_forest_hypothesis(g: Multigraph) -> bool:
    """Whether collapsing parallel classes in G* leaves a forest."""
    return is_forest(star_subgraphs(g).ore_tight.graph)


def _forest(g: Multigraph, k: int, tel: Telemetry) -> dict[Edge, int]:
    if g.num_edges == 0:
        return {}
    dmu = d_mu_max(g)
    if k >= dmu:
        return extend(g, k, {}, g.edges(), "forest", tel)
    if k != dmu - 1 or not check_star_forest_hypothesis(g):
        raise HypothesisError("peeling left the star-forest regime")
    tight = star_subgraphs(g).ore_tight
    if tight.graph.num_edges == 0:
        # every vertex outside G* has d + mu < D̄mu, so G - V(G*) fits in k colors
        S = set(tight.vertices)
        inner = [e for e in g.edges() if e[0] not in S and e[1] not in S]
        outer = [e for e in g.edges() if e[0] in S or e[1] in S]
        col = extend(g, k, {}, inner, "forest", tel)
        return extend(g, k, col, outer, "forest", tel)
    merged = tight.graph.merged()
    leaf = next(a for a in range(merged.n) if merged.degree(a) == 1)
    v = tight.vertices[leaf]
    w = tight.vertices[merged.neighbors(leaf)[0]]
    a, b = min(v, w), max(v, w)
    peeled = g.remove_edge(a, b)
    col = _forest(peeled, k, tel)
    # peeled keeps copies 0..m-2 of ab, so instance names carry over unchanged
    return extend(g, k, col, [(a, b, g.mu(a, b) - 1)], "forest", tel)


def color_forest_bound(g: Multigraph, tel: Telemetry | None = None) -> PartialColoring:
    """Total proper coloring with at most D̄mu(G) - 1 colors, for G whose
    tight subgraph G* merges to a forest."""
    tel = TELEMETRY if tel is None else tel
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    if not check_star_forest_hypothesis(g):
        raise HypothesisError("G* has a cycle of length greater than 2")
    k = d_mu_max(g) - 1
    return PartialColoring(g, k, _forest(g, k, tel))
