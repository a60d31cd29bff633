"""Instance corpora: exhaustive small graphs and seeded random families."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

import networkx as nx
import numpy as np

from .graph import Multigraph, build, from_networkx, random_multigraph, to_graph6
from .tuza import is_triangle_free

MAX_EXHAUSTIVE_TABLES = 3 ** 10


def multigraphs_up_to_iso(n: int, max_mult: int) -> list[Multigraph]:
    """One representative per isomorphism class of loopless multigraphs on
    ``n`` labelled vertices with multiplicities ``0..max_mult``.

    Canonical form: the smallest base-``max_mult + 1`` code over all vertex
    permutations.  Feasible while ``(max_mult + 1) ** C(n, 2)`` stays small.
    """
    return list(_iso_classes(n, max_mult))


@lru_cache(maxsize=16)
def _iso_classes(n: int, max_mult: int) -> tuple[Multigraph, ...]:
    pairs = list(combinations(range(n), 2))
    base = max_mult + 1
    total = base ** len(pairs)
    if total > MAX_EXHAUSTIVE_TABLES:
        raise ValueError(f"{total} labelled tables is beyond the exhaustive guard")
    if not pairs:
        return (build(n, []),)
    digits = np.array(list(product(range(base), repeat=len(pairs))), dtype=np.int64)[:, ::-1]
    weights = base ** np.arange(len(pairs), dtype=np.int64)
    canon = digits @ weights
    pos = {p: i for i, p in enumerate(pairs)}
    for perm in permutations(range(n)):
        target = [pos[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        moved = np.empty_like(digits)
        moved[:, target] = digits
        np.minimum(canon, moved @ weights, out=canon)
    reps = np.unique(canon)
    out = []
    for code in reps.tolist():
        edges = []
        for (a, b) in pairs:
            code, m = divmod(code, base)
            if m:
                edges.append((a, b, m))
        out.append(build(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def _atlas() -> tuple:
    return tuple(nx.graph_atlas_g())


def simple_graphs(n: int) -> list[Multigraph]:
    """All simple graphs on ``n <= 7`` vertices up to isomorphism."""
    if not 0 <= n <= 7:
        raise ValueError("the graph atlas covers 0..7 vertices")
    return [from_networkx(h) for h in _atlas() if h.number_of_nodes() == n]


def triangle_free_graphs(max_n: int, min_n: int = 1) -> list[Multigraph]:
    return [g for n in range(min_n, max_n + 1) for g in simple_graphs(n) if is_triangle_free(g)]


def graph6_lines(graphs) -> list[str]:
    return [to_graph6(g) for g in graphs]


def instance_rng(seed: int, index: int) -> random.Random:
    """Independent deterministic stream for instance ``index`` of a run."""
    return random.Random(seed * 1_000_003 + index)


def random_instance(seed: int, index: int, max_n: int, max_mult: int,
                    min_n: int = 2) -> Multigraph:
    rng = instance_rng(seed, index)
    n = rng.randint(min_n, max_n)
    mult = rng.randint(1, max_mult)
    p = rng.uniform(0.25, 0.9)
    return random_multigraph(rng.randrange(2 ** 31), n, mult, p)


def random_simple(seed: int, index: int, max_n: int, min_n: int = 2) -> Multigraph:
    return random_instance(seed, index, max_n, 1, min_n)
