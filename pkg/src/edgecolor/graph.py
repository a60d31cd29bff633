"""Loopless multigraphs on dense integer vertices.

A :class:`Multigraph` is an immutable symmetric multiplicity table.  Parallel
edges are individually addressable as ``(v, w, copy)`` triples with ``v < w``
and ``0 <= copy < mult(v, w)``, which is what the colorers key on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

import networkx as nx

Edge = tuple[int, int, int]
"""An edge instance ``(v, w, copy)`` with ``v < w``."""


class GraphFormatError(ValueError):
    """Malformed multigraph text or graph6 input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Multigraph:
    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.mult) != self.n or any(len(row) != self.n for row in self.mult):
            raise ValueError("multiplicity table must be n x n")
        for v in range(self.n):
            if self.mult[v][v] != 0:
                raise ValueError(f"loop at vertex {v}")
            for w in range(v + 1, self.n):
                if self.mult[v][w] != self.mult[w][v]:
                    raise ValueError(f"asymmetric multiplicity at {v},{w}")
                if self.mult[v][w] < 0:
                    raise ValueError(f"negative multiplicity at {v},{w}")

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def mu(self, v: int, w: int) -> int:
        return self.mult[v][w]

    def degree(self, v: int) -> int:
        return sum(self.mult[v])

    def degrees(self) -> list[int]:
        return [sum(row) for row in self.mult]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, m in enumerate(self.mult[v]) if m]

    def pairs(self) -> list[tuple[int, int, int]]:
        """Adjacent pairs as ``(v, w, mult)`` with ``v < w``."""
        return [(v, w, self.mult[v][w])
                for v, w in combinations(range(self.n), 2) if self.mult[v][w]]

    def edges(self) -> list[Edge]:
        """All edge instances in canonical order."""
        return [(v, w, c) for v, w, m in self.pairs() for c in range(m)]

    @property
    def num_edges(self) -> int:
        return sum(m for _, _, m in self.pairs())

    def is_simple(self) -> bool:
        return all(m <= 1 for _, _, m in self.pairs())

    def has_edge(self, e: Edge) -> bool:
        v, w, c = e
        return 0 <= v < w < self.n and 0 <= c < self.mult[v][w]

    def d_set(self, v: int, F: Iterable[int]) -> int:
        """``d_F(v)``: number of edges from ``v`` into ``F`` (``v`` may lie outside ``F``)."""
        row = self.mult[v]
        return sum(row[w] for w in set(F))

    # -- edits (return new graphs) ----------------------------------------

    def with_mult(self, v: int, w: int, m: int) -> Multigraph:
        if v == w:
            raise ValueError("loops are not allowed")
        rows = [list(r) for r in self.mult]
        rows[v][w] = rows[w][v] = m
        return Multigraph(self.n, tuple(tuple(r) for r in rows))

    def add_edge(self, v: int, w: int, count: int = 1) -> Multigraph:
        return self.with_mult(v, w, self.mult[v][w] + count)

    def remove_edge(self, v: int, w: int, count: int = 1) -> Multigraph:
        if self.mult[v][w] < count:
            raise ValueError(f"no edge {v}{w} to remove")
        return self.with_mult(v, w, self.mult[v][w] - count)

    def merged(self) -> Multigraph:
        """Underlying simple graph (parallel classes collapsed)."""
        return Multigraph(self.n, tuple(tuple(min(m, 1) for m in row) for row in self.mult))

    def __str__(self) -> str:
        return dumps(self).strip().replace("\n", "; ")


def build(n: int, edges: Iterable[tuple[int, int, int]]) -> Multigraph:
    """Build a multigraph from ``(v, w, multiplicity)`` entries; repeats accumulate."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [[0] * n for _ in range(n)]
    for v, w, m in edges:
        if not (0 <= v < n and 0 <= w < n):
            raise ValueError(f"vertex out of range in edge ({v}, {w})")
        if v == w:
            raise ValueError(f"loop at vertex {v}")
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m}")
        rows[v][w] += m
        rows[w][v] += m
    return Multigraph(n, tuple(tuple(r) for r in rows))


def empty(n: int) -> Multigraph:
    return build(n, [])


def simple(n: int, edges: Iterable[tuple[int, int]]) -> Multigraph:
    return build(n, [(v, w, 1) for v, w in edges])


def complete(n: int) -> Multigraph:
    return simple(n, combinations(range(n), 2))


def cycle(n: int) -> Multigraph:
    return simple(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    return simple(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Multigraph:
    return simple(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return simple(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# -- degree statistics ------------------------------------------------------

def mu_vertex(g: Multigraph, v: int) -> int:
    """Largest multiplicity at ``v``; 0 for an isolated vertex."""
    return max(g.mult[v], default=0)


def _require_vertices(g: Multigraph) -> None:
    if g.n == 0:
        raise ValueError("degree statistics are undefined on the empty graph")


def max_degree(g: Multigraph) -> int:
    _require_vertices(g)
    return max(g.degrees())


def max_mult(g: Multigraph) -> int:
    _require_vertices(g)
    return max(mu_vertex(g, v) for v in g.vertices)


def d_mu(g: Multigraph, v: int) -> int:
    return g.degree(v) + mu_vertex(g, v)


def d_mu_max(g: Multigraph) -> int:
    """Ore's parameter: the maximum over ``v`` of ``d(v) + mu(v)``."""
    _require_vertices(g)
    return max(d_mu(g, v) for v in g.vertices)


class DegreeStats(NamedTuple):
    delta: int
    mu: int
    d_mu_max: int


def degree_stats(g: Multigraph) -> DegreeStats:
    return DegreeStats(max_degree(g), max_mult(g), d_mu_max(g))


# -- subgraphs --------------------------------------------------------------

class InducedSubgraph(NamedTuple):
    """An induced subgraph relabelled ``0..len(vertices)-1``.

    ``vertices[i]`` is the host vertex that became vertex ``i``.
    """
    vertices: tuple[int, ...]
    graph: Multigraph

    def host_pairs(self) -> list[tuple[int, int, int]]:
        return [(self.vertices[a], self.vertices[b], m) for a, b, m in self.graph.pairs()]


def induced_sub(g: Multigraph, D: Iterable[int]) -> InducedSubgraph:
    verts = tuple(sorted(set(D)))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    rows = tuple(tuple(g.mult[v][w] for w in verts) for v in verts)
    return InducedSubgraph(verts, Multigraph(len(verts), rows))


def induced(g: Multigraph, D: Iterable[int]) -> Multigraph:
    """``G[D]`` with multiplicities preserved, relabelled in sorted order of ``D``."""
    return induced_sub(g, D).graph


def d_F(g: Multigraph, v: int, F: Iterable[int]) -> int:
    return g.d_set(v, F)


class StarSubgraphs(NamedTuple):
    max_degree: InducedSubgraph      # G_Delta
    max_degree_mult: InducedSubgraph  # G^{Delta mu}, possibly vertexless
    ore_tight: InducedSubgraph       # G*: vertices with d(v) + mu(v) = D̄mu(G)


def star_subgraphs(g: Multigraph) -> StarSubgraphs:
    delta, mu, dmu = degree_stats(g)
    deg = g.degrees()
    mus = [mu_vertex(g, v) for v in g.vertices]
    top = [v for v in g.vertices if deg[v] == delta]
    both = [v for v in top if mus[v] == mu]
    tight = [v for v in g.vertices if deg[v] + mus[v] == dmu]
    return StarSubgraphs(induced_sub(g, top), induced_sub(g, both), induced_sub(g, tight))


def join(k: int, h: Multigraph) -> Multigraph:
    """``I_k ∨ H``: vertices ``0..k-1`` form the independent set, H is shifted by ``k``."""
    if k < 1:
        raise ValueError("join needs k >= 1")
    edges = [(i, k + w, 1) for i in range(k) for w in h.vertices]
    edges += [(k + v, k + w, m) for v, w, m in h.pairs()]
    return build(k + h.n, edges)


def is_forest(g: Multigraph) -> bool:
    """Whether the merged simple graph is acyclic."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v, w, _ in g.pairs():
        a, b = find(v), find(w)
        if a == b:
            return False
        parent[a] = b
    return True


# -- generation -------------------------------------------------------------

def random_multigraph(seed: int, n: int, max_mult: int, edge_prob: float) -> Multigraph:
    """Each pair independently gets an edge with probability ``edge_prob``,
    then a uniform multiplicity in ``1..max_mult``."""
    if n < 1 or max_mult < 1 or not 0.0 <= edge_prob <= 1.0:
        raise ValueError("need n >= 1, max_mult >= 1, 0 <= edge_prob <= 1")
    rng = random.Random(seed)
    edges = []
    for v, w in combinations(range(n), 2):
        if rng.random() < edge_prob:
            edges.append((v, w, rng.randint(1, max_mult)))
    return build(n, edges)


def relabel(g: Multigraph, perm: Sequence[int]) -> Multigraph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return build(g.n, [(perm[v], perm[w], m) for v, w, m in g.pairs()])


# -- text and graph6 formats ------------------------------------------------

def dumps(g: Multigraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {v} {w} {m}" for v, w, m in g.pairs()]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Multigraph:
    """Parse the ``n <count>`` / ``e <v> <w> <mult>`` text format."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2:
                if n is not None:
                    raise GraphFormatError("duplicate 'n' line", lineno)
                n = int(parts[1])
                if n < 0:
                    raise GraphFormatError("negative vertex count", lineno)
            elif parts[0] == "e" and len(parts) == 4:
                if n is None:
                    raise GraphFormatError("'e' before 'n'", lineno)
                v, w, m = map(int, parts[1:])
                if not (0 <= v < n and 0 <= w < n):
                    raise GraphFormatError(f"vertex out of range in '{line}'", lineno)
                if v == w:
                    raise GraphFormatError(f"loop at vertex {v}", lineno)
                if m < 1:
                    raise GraphFormatError("multiplicity must be positive", lineno)
                edges.append((v, w, m))
            else:
                raise GraphFormatError(f"unrecognised line '{line}'", lineno)
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(str(exc), lineno) from None
    if n is None:
        raise GraphFormatError("missing 'n' line")
    return build(n, edges)


def from_networkx(h: nx.Graph) -> Multigraph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    # MultiGraph.edges() yields one entry per parallel copy, so repeats accumulate.
    return build(len(index), [(index[a], index[b], 1) for a, b in h.edges()])


def to_networkx(g: Multigraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((v, w) for v, w, _ in g.pairs())
    return h


def from_graph6(s: str) -> Multigraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except Exception as exc:  # networkx raises a mix of NetworkXError/ValueError
        raise GraphFormatError(f"bad graph6 string {s!r}: {exc}") from None
    return from_networkx(h)


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 encodes simple graphs only")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def read_graph(path: str) -> Multigraph:
    """Read the repo text format, or a one-line graph6 file (``.g6``)."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".g6"):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    return loads(text)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Multigraph]:
    for line in lines:
        if line.strip():
            yield from_graph6(line)
