"""Proper partial k-edge-colorings and alternating-path (Kempe) machinery.

Colors are the integers ``1..k``.  A :class:`PartialColoring` colors a subset
``M`` of the edge instances of its host graph; its derived views give the
present/missing color sets at a vertex and the colors on a vertex pair.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Edge, GraphFormatError, Multigraph


def norm_edge(v: int, w: int, c: int = 0) -> Edge:
    return (v, w, c) if v < w else (w, v, c)


def other_end(e: Edge, v: int) -> int:
    return e[1] if e[0] == v else e[0]


@dataclass(frozen=True)
class PartialColoring:
    """Colors on a subset of ``graph``'s edge instances.

    Instances are never mutated; ``recolor``/``uncolor`` return new values.
    Construction checks that every key is an instance of the host and every
    color lies in ``1..k``; properness is checked separately by :func:`is_proper`.
    """
    graph: Multigraph
    k: int
    colors: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        for e, c in self.colors.items():
            if not self.graph.has_edge(e):
                raise ValueError(f"{e} is not an edge instance of the host graph")
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} on {e} outside 1..{self.k}")
        object.__setattr__(self, "_at", _index(self.colors))

    # derived views

    def colored_edges(self) -> list[Edge]:
        return sorted(self.colors)

    def uncolored_edges(self) -> list[Edge]:
        return [e for e in self.graph.edges() if e not in self.colors]

    def is_total(self) -> bool:
        return len(self.colors) == self.graph.num_edges

    def subgraph(self) -> Multigraph:
        """The colored subgraph ``M`` on the host's vertex set."""
        rows = [[0] * self.graph.n for _ in range(self.graph.n)]
        for v, w, _ in self.colors:
            rows[v][w] += 1
            rows[w][v] += 1
        return Multigraph(self.graph.n, tuple(tuple(r) for r in rows))

    def d_M(self, v: int) -> int:
        return len(self._at[v])

    def mu_M(self, v: int, w: int) -> int:
        a, b = min(v, w), max(v, w)
        return sum(1 for (x, y, _) in self.colors if x == a and y == b)

    def neighbors_M(self, v: int) -> set[int]:
        return {other_end(e, v) for e in self._at[v].values()}

    def present(self, w: int) -> set[int]:
        """``psi(w)``: colors on colored edges at ``w``."""
        return set(self._at[w])

    def missing(self, w: int) -> set[int]:
        """``O(w) = [k] minus psi(w)``."""
        return set(range(1, self.k + 1)) - set(self._at[w])

    def between(self, w: int, z: int) -> set[int]:
        """``psi(w, z)``: colors on edges joining ``w`` and ``z``."""
        return {c for c, e in self._at[w].items() if other_end(e, w) == z}

    def edge_at(self, v: int, color: int) -> Edge | None:
        return self._at[v].get(color)

    def colors_used(self) -> set[int]:
        return set(self.colors.values())

    # edits

    def recolor(self, updates: Mapping[Edge, int]) -> PartialColoring:
        new = dict(self.colors)
        new.update(updates)
        return PartialColoring(self.graph, self.k, new)

    def uncolor(self, edges: Iterable[Edge]) -> PartialColoring:
        drop = set(edges)
        return PartialColoring(self.graph, self.k,
                               {e: c for e, c in self.colors.items() if e not in drop})

    def with_k(self, k: int) -> PartialColoring:
        return PartialColoring(self.graph, k, self.colors)


def _index(colors: Mapping[Edge, int]) -> defaultdict[int, dict[int, Edge]]:
    at: defaultdict[int, dict[int, Edge]] = defaultdict(dict)
    for e, c in colors.items():
        # on an improper coloring later entries shadow earlier ones; is_proper
        # does not rely on this index
        at[e[0]][c] = e
        at[e[1]][c] = e
    return at


def is_proper(c: PartialColoring) -> bool:
    seen: set[tuple[int, int]] = set()
    for (v, w, _), col in c.colors.items():
        for x in (v, w):
            if (x, col) in seen:
                return False
            seen.add((x, col))
    return True


def missing_colors(c: PartialColoring, w: int) -> set[int]:
    return c.missing(w)


# -- alternating paths ------------------------------------------------------

@dataclass(frozen=True)
class KempePath:
    """A maximal path whose edges alternate between ``alpha`` and ``beta``.

    ``vertices[0]`` is the start; ``edges[i]`` joins ``vertices[i]`` and
    ``vertices[i + 1]``.  A single vertex is a path of length 0.
    """
    alpha: int
    beta: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)


def kempe_path_from(c: PartialColoring, v: int, alpha: int, beta: int) -> KempePath:
    """The unique maximal ``[alpha, beta]``-path starting at ``v``."""
    if alpha == beta:
        raise ValueError("alpha and beta must differ")
    has_a = c.edge_at(v, alpha) is not None
    has_b = c.edge_at(v, beta) is not None
    if has_a and has_b:
        raise ValueError(f"vertex {v} is interior to the [{alpha},{beta}] subgraph")
    verts = [v]
    edges: list[Edge] = []
    nxt = alpha if has_a else beta
    cur = v
    while True:
        e = c.edge_at(cur, nxt)
        if e is None:
            break
        edges.append(e)
        cur = other_end(e, cur)
        verts.append(cur)
        nxt = beta if nxt == alpha else alpha
        if cur == v:  # cannot happen for a proper coloring; guards improper input
            raise ValueError("alternating walk returned to its start; coloring is improper")
    return KempePath(alpha, beta, tuple(verts), tuple(edges))


def kempe_swap(c: PartialColoring, p: KempePath) -> PartialColoring:
    """Exchange ``alpha`` and ``beta`` along a maximal alternating path."""
    if not p.edges:
        return c
    fresh = kempe_path_from(c, p.start, p.alpha, p.beta)
    if fresh.edges != p.edges:
        raise ValueError("path is not the maximal alternating path of this coloring")
    swap = {p.alpha: p.beta, p.beta: p.alpha}
    return c.recolor({e: swap[c.colors[e]] for e in p.edges})


# -- text format ------------------------------------------------------------

def dumps_coloring(c: PartialColoring) -> str:
    lines = [f"k {c.k}"]
    for e in c.graph.edges():
        v, w, copy = e
        if e in c.colors:
            lines.append(f"c {v} {w} {copy} {c.colors[e]}")
        else:
            lines.append(f"u {v} {w} {copy}")
    return "\n".join(lines) + "\n"


def loads_coloring(text: str, graph: Multigraph) -> PartialColoring:
    k = None
    colors: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "k" and len(parts) == 2:
                k = int(parts[1])
            elif parts[0] == "c" and len(parts) == 5:
                v, w, copy, col = map(int, parts[1:])
                colors[norm_edge(v, w, copy)] = col
            elif parts[0] == "u" and len(parts) == 4:
                pass
            else:
                raise GraphFormatError(f"unrecognised line '{line}'", lineno)
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(str(exc), lineno) from None
    if k is None:
        raise GraphFormatError("missing 'k' line")
    return PartialColoring(graph, k, colors)
