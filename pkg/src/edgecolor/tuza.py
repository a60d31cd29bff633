"""Triangle packing and covering on joins ``I_k ∨ H`` with H triangle-free.

For a vertex set D of a simple graph, ``phi_k(D) = k|D| - |E(G[D])|``.  On a
join with triangle-free H the packing number equals the largest
k-edge-colorable subgraph of H and the covering number equals
``k|V(H)| - phi_k(H)``.  This module computes both sides exactly, with
independent branch-and-bound oracles for the packing and covering numbers
of the join itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .exact import maximal_colorable_subgraph
from .graph import Multigraph, dumps, join, max_degree, induced

Triangle = tuple[int, int, int]
Pair = tuple[int, int]


class ScaleError(ValueError):
    """Instance exceeds the exact-search guard."""


MAX_PHI_VERTICES = 24
MAX_TRIANGLES = 64
MAX_ALPHA_EDGES = 60


def _require_simple(g: Multigraph) -> None:
    if not g.is_simple():
        raise ValueError("expected a simple graph")


def is_triangle_free(h: Multigraph) -> bool:
    adj = [set(h.neighbors(v)) for v in h.vertices]
    return not any(adj[v] & adj[w] for v, w, _ in h.pairs())


def triangles(g: Multigraph) -> list[Triangle]:
    adj = [set(g.neighbors(v)) for v in g.vertices]
    return [(a, b, c) for a, b, _ in g.pairs() for c in sorted(adj[a] & adj[b]) if c > b]


# -- phi_k and k-optimal sets ------------------------------------------------

def phi_value(g: Multigraph, k: int, D: Iterable[int]) -> int:
    D = list(D)
    return k * len(D) - induced(g, D).num_edges


def is_k_dependent(g: Multigraph, k: int, D: Iterable[int]) -> bool:
    D = list(D)
    return not D or max_degree(induced(g, D)) <= k - 1


def is_k_dominating(g: Multigraph, k: int, D: Iterable[int]) -> bool:
    S = set(D)
    return all(len(S.intersection(g.neighbors(v))) >= k for v in g.vertices if v not in S)


@dataclass(frozen=True)
class KOptimalWitness:
    D: tuple[int, ...]
    value: int
    k_dependent: bool
    k_dominating: bool


def _phi_search(g: Multigraph, k: int, collect_all: bool):
    """Max of phi_k over all subsets; with ``collect_all`` also every maximiser."""
    n = g.n
    if n > MAX_PHI_VERTICES:
        raise ScaleError(f"phi_k search limited to {MAX_PHI_VERTICES} vertices")
    adj = [0] * n
    for v, w, _ in g.pairs():
        adj[v] |= 1 << w
        adj[w] |= 1 << v
    best = [-1]
    found: list[int] = []

    def rec(i: int, D: int, val: int):
        bound = val + k * (n - i)
        if bound < best[0] or (not collect_all and bound == best[0]):
            return
        if i == n:
            if val > best[0]:
                best[0] = val
                found[:] = [D]
            elif val == best[0] and collect_all:
                found.append(D)
            return
        # including vertex i adds k and loses its edges into D
        rec(i + 1, D | (1 << i), val + k - bin(adj[i] & D).count("1"))
        rec(i + 1, D, val)

    rec(0, 0, 0)
    sets = [tuple(v for v in range(n) if D >> v & 1) for D in found]
    return best[0], sets


def reduce_to_k_dependent(g: Multigraph, k: int, T: Iterable[int]) -> set[int]:
    """Drop vertices of induced degree >= k until T is k-dependent.

    Each drop loses k from ``k|T|`` and at least k induced edges, so
    phi_k never decreases.
    """
    D = set(T)
    while True:
        degs = {v: sum(1 for w in g.neighbors(v) if w in D) for v in D}
        heavy = [v for v, d in degs.items() if d >= k]
        if not heavy:
            return D
        D.remove(max(heavy, key=lambda v: (degs[v], -v)))


def phi_k(g: Multigraph, k: int) -> tuple[int, KOptimalWitness]:
    """``max_D phi_k(D)`` over all vertex subsets, with a k-dependent witness."""
    _require_simple(g)
    if k < 1:
        raise ValueError("k must be >= 1")
    value, sets = _phi_search(g, k, collect_all=False)
    D = sorted(reduce_to_k_dependent(g, k, sets[0]))
    return value, KOptimalWitness(tuple(D), phi_value(g, k, D),
                                  is_k_dependent(g, k, D), is_k_dominating(g, k, D))


def all_k_optimal_sets(g: Multigraph, k: int) -> list[tuple[int, ...]]:
    """Every k-dependent vertex set achieving ``phi_k(G)``."""
    _require_simple(g)
    value, sets = _phi_search(g, k, collect_all=True)
    return [D for D in sets if is_k_dependent(g, k, D)]


# -- alpha'_k ---------------------------------------------------------------

def alpha_prime_k(g: Multigraph, k: int) -> tuple[int, dict[tuple[int, int, int], int]]:
    """Largest k-edge-colorable subgraph: size and a coloring of it.

    Branch and bound: each edge instance is skipped or colored, with the
    never-used-color symmetry break and the bound
    ``colored + sum_v min(open incident edges, free colors) / 2``, tightened
    per color by half the open vertices still free in that color.
    Seeded by a greedy maximal subgraph.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = g.edges()
    if len(edges) > MAX_ALPHA_EDGES:
        raise ScaleError(f"alpha'_k search limited to {MAX_ALPHA_EDGES} edges")
    seed = maximal_colorable_subgraph(g, k, mode="greedy").coloring
    best_col = dict(seed.colors)
    best = [len(best_col)]
    ub_global = min(len(edges), sum(min(d, k) for d in g.degrees()) // 2)
    if best[0] >= ub_global:
        return best[0], best_col
    n = g.n
    used = [0] * n
    open_deg = g.degrees()
    cur: dict[tuple[int, int, int], int] = {}
    full = (1 << k) - 1

    def cap() -> int:
        by_vertex = sum(min(open_deg[v], k - bin(used[v]).count("1")) for v in range(n)) // 2
        live = [used[v] for v in range(n) if open_deg[v]]
        # each color class adds a matching on the vertices still free in it
        by_color = sum(sum(1 for u in live if not u >> c & 1) // 2 for c in range(k))
        return min(by_vertex, by_color)

    def rec(i: int, maxused: int):
        if len(cur) + cap() <= best[0]:
            return
        if i == len(edges):
            best[0] = len(cur)
            best_col.clear()
            best_col.update(cur)
            return
        v, w, _ = edges[i]
        open_deg[v] -= 1
        open_deg[w] -= 1
        free = ~(used[v] | used[w]) & full & ((1 << min(maxused + 2, k)) - 1)
        while free and best[0] < ub_global:
            bit = free & -free
            free ^= bit
            c = bit.bit_length() - 1
            used[v] |= bit
            used[w] |= bit
            cur[edges[i]] = c + 1
            rec(i + 1, max(maxused, c))
            del cur[edges[i]]
            used[v] ^= bit
            used[w] ^= bit
        if best[0] < ub_global:
            rec(i + 1, maxused)
        open_deg[v] += 1
        open_deg[w] += 1

    rec(0, -1)
    return best[0], best_col


# -- packing and covering oracles -------------------------------------------

def _tri_edges(t: Triangle) -> tuple[Pair, Pair, Pair]:
    a, b, c = t
    return ((a, b), (a, c), (b, c))


def max_triangle_packing(g: Multigraph) -> list[Triangle]:
    """A largest set of pairwise edge-disjoint triangles (branch and bound)."""
    _require_simple(g)
    tris = triangles(g)
    if len(tris) > MAX_TRIANGLES:
        raise ScaleError(f"packing search limited to {MAX_TRIANGLES} triangles")
    best: list[Triangle] = []
    chosen: list[Triangle] = []
    taken: set[Pair] = set()

    def rec(i: int, free_edges: int):
        if len(chosen) > len(best):
            best[:] = chosen
        if i == len(tris):
            return
        remaining = sum(1 for t in tris[i:] if not taken.intersection(_tri_edges(t)))
        if len(chosen) + min(remaining, free_edges // 3) <= len(best):
            return
        t = tris[i]
        es = _tri_edges(t)
        if not taken.intersection(es):
            chosen.append(t)
            taken.update(es)
            rec(i + 1, free_edges - 3)
            taken.difference_update(es)
            chosen.pop()
        rec(i + 1, free_edges)

    rec(0, g.num_edges)
    return best


def min_triangle_cover(g: Multigraph) -> list[Pair]:
    """A smallest edge set meeting every triangle (branch and bound).

    Branches on the three edges of the first uncovered triangle; edges
    rejected in earlier branches are frozen to avoid duplicate covers.
    """
    _require_simple(g)
    tris = triangles(g)
    if len(tris) > MAX_TRIANGLES:
        raise ScaleError(f"cover search limited to {MAX_TRIANGLES} triangles")
    tri_sets = [_tri_edges(t) for t in tris]
    best: list[list[Pair]] = [sorted({e for es in tri_sets for e in es[:1]})]
    cover: list[Pair] = []
    chosen: set[Pair] = set()
    frozen: set[Pair] = set()

    def lower_bound(open_tris) -> int:
        used: set[Pair] = set()
        lb = 0
        for es in open_tris:
            if not used.intersection(es):
                used.update(es)
                lb += 1
        return lb

    def rec():
        open_tris = [es for es in tri_sets if not chosen.intersection(es)]
        if not open_tris:
            if len(cover) < len(best[0]):
                best[0] = list(cover)
            return
        if len(cover) + lower_bound(open_tris) >= len(best[0]):
            return
        es = open_tris[0]
        newly_frozen = []
        for e in es:
            if e in frozen:
                continue
            cover.append(e)
            chosen.add(e)
            rec()
            chosen.discard(e)
            cover.pop()
            frozen.add(e)
            newly_frozen.append(e)
        for e in newly_frozen:
            frozen.discard(e)

    rec()
    return sorted(best[0])


def nu_exact(g: Multigraph) -> int:
    return len(max_triangle_packing(g))


def tau_exact(g: Multigraph) -> int:
    return len(min_triangle_cover(g))


# -- joins --------------------------------------------------------------------

@dataclass(frozen=True)
class TuzaInstance:
    k: int
    h: Multigraph

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        _require_simple(self.h)
        if not is_triangle_free(self.h):
            raise ValueError("H must be triangle-free")

    @property
    def g(self) -> Multigraph:
        return join(self.k, self.h)


def tau_nu_join(inst: TuzaInstance) -> tuple[int, int]:
    """``(tau, nu)`` of ``I_k ∨ H`` from ``phi_k(H)`` and ``alpha'_k(H)``."""
    nu, _ = alpha_prime_k(inst.h, inst.k)
    phi, _ = phi_k(inst.h, inst.k)
    tau = inst.k * inst.h.n - phi
    if tau > 2 * nu:
        raise AssertionError(f"tau={tau} > 2*nu={2 * nu} on a join")
    return tau, nu


def packing_to_coloring(k: int, h: Multigraph, packing: Sequence[Triangle]) -> dict[Pair, int]:
    """Color each H-edge of a join packing by its apex in ``I_k`` (color apex+1)."""
    out = {}
    for t in packing:
        apex = [x for x in t if x < k]
        if len(apex) != 1:
            raise ValueError(f"{t} is not a join triangle")
        a, b = sorted(x - k for x in t if x >= k)
        if (a, b) in out:
            raise ValueError("packing reuses an H-edge")
        out[(a, b)] = apex[0] + 1
    return out


def coloring_to_packing(k: int, colors: dict[Pair, int]) -> list[Triangle]:
    return sorted((c - 1, a + k, b + k) for (a, b), c in colors.items())


def cover_to_set(k: int, h: Multigraph, cover: Sequence[Pair]) -> tuple[int, ...]:
    """Symmetrise a join cover onto its cheapest apex; return ``V(H) - C_apex``."""
    X = set(cover)
    sizes = [sum(1 for w in h.vertices if (i, w + k) in X) for i in range(k)]
    star = sizes.index(min(sizes))
    C = {w for w in h.vertices if (star, w + k) in X}
    return tuple(w for w in h.vertices if w not in C)


def set_to_cover(k: int, h: Multigraph, D: Iterable[int]) -> list[Pair]:
    """Edges of ``H[D]`` plus all apex edges to ``V(H) - D``, in join labels."""
    D = set(D)
    X = [(a + k, b + k) for a, b, _ in h.pairs() if a in D and b in D]
    X += [(i, w + k) for i in range(k) for w in h.vertices if w not in D]
    return sorted(X)


# -- the bound 2 alpha'_k >= k|V| - phi_k ------------------------------------

@dataclass
class AlphiResult:
    k: int
    alpha: int
    phi: int
    rhs: int                      # k|V| - phi_k
    maximal_sizes: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return 2 * self.alpha >= self.rhs and all(2 * m >= self.rhs for m in self.maximal_sizes)

    @property
    def tight(self) -> bool:
        return 2 * self.alpha == self.rhs


def check_alphi(g: Multigraph, k: int, orders: Iterable[Sequence] = ()) -> AlphiResult:
    """Check ``2 alpha'_k >= k|V| - phi_k``, and the same for the maximal
    subgraphs grown in each of ``orders`` (plus the default order)."""
    _require_simple(g)
    alpha, _ = alpha_prime_k(g, k)
    phi, _ = phi_k(g, k)
    res = AlphiResult(k, alpha, phi, k * g.n - phi)
    for order in [None, *orders]:
        cert = maximal_colorable_subgraph(g, k, order)
        res.maximal_sizes.append(len(cert.coloring.colors))
    return res


# -- degree-constrained subgraphs and the k-cover conjecture ------------------

def degree_constrained_subgraph(g: Multigraph, k: int, D: Iterable[int]) -> list[Pair] | None:
    """A subgraph with max degree <= k and degree exactly k off ``D``, or None.

    Reduced to perfect matching: every edge contributes two linked ports;
    a vertex outside D owns ``d - k`` sinks that must absorb unused ports,
    a vertex in D owns ``max(0, d - k)`` such sinks plus ``min(d, k)`` optional
    ones drained by a shared clique whose parity is fixed by degree sums.
    """
    _require_simple(g)
    D = set(D)
    G = nx.Graph()
    ports: dict[int, list] = {v: [] for v in g.vertices}
    for v, w, _ in g.pairs():
        a, b = ("p", v, w, v), ("p", v, w, w)
        G.add_edge(a, b)
        ports[v].append(a)
        ports[w].append(b)
    optional = []
    for v in g.vertices:
        d = g.degree(v)
        if v not in D:
            if d < k:
                return None
            sinks = [("s", v, i) for i in range(d - k)]
        else:
            sinks = [("s", v, i) for i in range(max(0, d - k))]
            extra = [("o", v, i) for i in range(min(d, k))]
            optional += extra
            sinks += extra
        for s in sinks:
            G.add_node(s)
            for p in ports[v]:
                G.add_edge(p, s)
    if optional:
        # drained count = sum_{v in D} deg_M(v) = 2|E(M)| - k|V - D|, parity fixed
        size = len(optional)
        if (size - k * (g.n - len(D))) % 2:
            size += 1
        pool = [("z", i) for i in range(size)]
        G.add_nodes_from(pool)
        G.add_edges_from(combinations(pool, 2))
        for o in optional:
            for z in pool:
                G.add_edge(o, z)
    matching = nx.max_weight_matching(G, maxcardinality=True)
    if 2 * len(matching) != G.number_of_nodes():
        return None
    chosen = []
    for a, b in matching:
        if a[0] == "p" and b[0] == "p" and a[1:3] == b[1:3]:
            chosen.append(a[1:3])
    return sorted(chosen)


def k_cover_subgraph(g: Multigraph, k: int, D: Iterable[int]) -> dict[Pair, int] | None:
    """A proper k-edge-coloring of some subgraph saturating every vertex
    outside ``D`` (degree exactly k), or None if there is none."""
    _require_simple(g)
    D = set(D)
    need = [0 if v in D else k for v in g.vertices]
    edges = [(v, w) for v, w, _ in g.pairs()]
    # saturate-first order: edges at vertices that must be covered come first
    edges.sort(key=lambda e: (-(need[e[0]] + need[e[1]]), e))
    n = g.n
    used = [0] * n
    avail = g.degrees()
    full = (1 << k) - 1
    cur: dict[Pair, int] = {}

    def deficit_ok(v: int) -> bool:
        return bin(used[v]).count("1") + avail[v] >= need[v]

    def rec(i: int, maxused: int) -> bool:
        if i == len(edges):
            return all(bin(used[v]).count("1") == need[v] or need[v] == 0 for v in range(n))
        v, w = edges[i]
        avail[v] -= 1
        avail[w] -= 1
        free = ~(used[v] | used[w]) & full & ((1 << min(maxused + 2, k)) - 1)
        while free:
            bit = free & -free
            free ^= bit
            c = bit.bit_length() - 1
            used[v] |= bit
            used[w] |= bit
            cur[(v, w)] = c + 1
            if rec(i + 1, max(maxused, c)):
                return True
            del cur[(v, w)]
            used[v] ^= bit
            used[w] ^= bit
        if deficit_ok(v) and deficit_ok(w) and rec(i + 1, maxused):
            return True
        avail[v] += 1
        avail[w] += 1
        return False

    if not all(deficit_ok(v) for v in range(n)):
        return None
    if rec(0, -1):
        return dict(cur)
    return None


@dataclass
class KCoverResult:
    k: int
    optimal_sets: list[tuple[int, ...]]
    witnesses: dict[tuple[int, ...], dict[Pair, int]]
    degree_subgraphs: dict[tuple[int, ...], list[Pair] | None]
    candidates: list[str] = field(default_factory=list)   # JSON replay records

    @property
    def counterexample(self) -> bool:
        return bool(self.candidates)


def conjecture_kcover_search(g: Multigraph, k: int) -> KCoverResult:
    """For every k-optimal D, look for a k-edge-colorable M with
    ``d_M(v) = k`` off D.  A D without one is recorded as a candidate."""
    _require_simple(g)
    sets = all_k_optimal_sets(g, k)
    res = KCoverResult(k, sets, {}, {})
    for D in sets:
        dcs = degree_constrained_subgraph(g, k, D)
        res.degree_subgraphs[D] = dcs
        wit = k_cover_subgraph(g, k, D) if dcs is not None else None
        if wit is None:
            res.candidates.append(json.dumps({
                "graph": dumps(g), "k": k, "D": list(D),
                "degree_subgraph_found": dcs is not None}, sort_keys=True))
        else:
            res.witnesses[D] = wit
    return res
