from __future__ import annotations

from itertools import permutations

import networkx as nx

from edgecolor import corpus
from edgecolor.graph import relabel, to_networkx


def test_simple_graph_counts():
    # number of graphs on n vertices up to isomorphism (OEIS A000088)
    assert [len(corpus.simple_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_triangle_free_counts():
    # triangle-free graphs on n vertices (OEIS A006785)
    assert [len(corpus.triangle_free_graphs(n, n)) for n in range(1, 7)] == [1, 2, 3, 7, 14, 38]


def test_multigraph_classes_simple_slice():
    for n in range(1, 6):
        assert len(corpus.multigraphs_up_to_iso(n, 1)) == len(corpus.simple_graphs(n))


def test_multigraph_classes_distinct_and_complete():
    for n in (3, 4):
        reps = corpus.multigraphs_up_to_iso(n, 2)
        keys = set()
        for g in reps:
            key = min(relabel(g, p).mult for p in permutations(range(n)))
            assert key not in keys
            keys.add(key)
        # 3 vertices, multiplicities 0..2: weighted triangles up to symmetry
        if n == 3:
            assert len(reps) == 10


def test_atlas_graphs_nonisomorphic():
    gs = [to_networkx(g) for g in corpus.simple_graphs(5)]
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            assert not nx.is_isomorphic(a, b)


def test_random_instances_deterministic():
    a = [corpus.random_instance(3, i, 8, 3) for i in range(20)]
    b = [corpus.random_instance(3, i, 8, 3) for i in range(20)]
    assert a == b
    assert all(g.is_simple() for g in (corpus.random_simple(3, i, 8) for i in range(20)))
