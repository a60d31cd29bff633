from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs, simple_graphs
from edgecolor.graph import (GraphFormatError, build, complete, cycle, d_F, d_mu_max,
                             degree_stats, dumps, empty, from_graph6, induced, is_forest,
                             join, loads, max_degree, max_mult, mu_vertex, random_multigraph,
                             star, star_subgraphs, to_graph6)
from edgecolor.tuza import is_triangle_free, triangles

DOUBLED_TRIANGLE = build(3, [(0, 1, 2), (1, 2, 1), (0, 2, 1)])


def test_build_triangle():
    g = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert g == complete(3)
    assert g.degrees() == [2, 2, 2]


def test_build_multiplicity_and_degree():
    g = build(2, [(0, 1, 3)])
    assert g.mu(0, 1) == 3 and g.mu(1, 0) == 3 and g.degree(0) == 3


def test_build_rejects_loop_and_range():
    with pytest.raises(ValueError):
        build(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        build(3, [(0, 3, 1)])
    with pytest.raises(ValueError):
        build(3, [(0, 1, 0)])


def test_build_accumulates():
    assert build(2, [(0, 1, 1), (1, 0, 2)]).mu(0, 1) == 3


def test_mu_vertex_examples():
    assert mu_vertex(DOUBLED_TRIANGLE, 0) == 2
    assert mu_vertex(empty(2), 0) == 0
    assert all(mu_vertex(complete(3), v) == 1 for v in range(3))


def test_d_mu_examples():
    s = degree_stats(complete(3))
    assert (s.d_mu_max, s.delta, s.mu) == (3, 2, 1)
    assert d_mu_max(DOUBLED_TRIANGLE) == 5
    assert d_mu_max(empty(1)) == 0
    with pytest.raises(ValueError):
        d_mu_max(empty(0))
    with pytest.raises(ValueError):
        max_degree(empty(0))


def test_join_examples():
    assert join(1, complete(2)) == complete(3)
    p3 = join(2, empty(1))
    assert p3.num_edges == 2 and p3.degree(2) == 2 and p3.mu(0, 1) == 0
    assert join(1, complete(3)) == complete(4)


def test_star_subgraphs_examples():
    s = star_subgraphs(complete(3))
    assert s.max_degree.graph == s.max_degree_mult.graph == s.ore_tight.graph == complete(3)
    s = star_subgraphs(star(3))
    assert s.max_degree.vertices == (0,) and s.max_degree.graph.num_edges == 0
    s = star_subgraphs(DOUBLED_TRIANGLE)
    assert s.ore_tight.vertices == (0, 1) and s.ore_tight.graph.mu(0, 1) == 2
    assert s.max_degree_mult.vertices == (0, 1)


def test_random_multigraph_examples():
    assert random_multigraph(1, 5, 3, 0.0).num_edges == 0
    assert random_multigraph(2, 6, 1, 0.8).is_simple()
    assert random_multigraph(3, 6, 3, 0.5) == random_multigraph(3, 6, 3, 0.5)


def test_induced_and_d_F():
    assert induced(complete(3), []).n == 0
    assert d_F(complete(3), 0, {1, 2}) == 2
    assert d_F(build(2, [(0, 1, 2)]), 0, {1}) == 2


def test_text_format_roundtrip_and_errors():
    g = DOUBLED_TRIANGLE
    assert loads(dumps(g)) == g
    assert loads("# c\nn 2\ne 0 1 1\ne 0 1 1  # again\n").mu(0, 1) == 2
    for text, line in [("n 2\ne 0 2 1\n", 2), ("n 2\ne 0 1\n", 2), ("n 2\nn 3\n", 2),
                       ("e 0 1 1\n", 1), ("n 2\ne 1 1 1\n", 2), ("n 2\nx\n", 2)]:
        with pytest.raises(GraphFormatError) as err:
            loads(text)
        assert err.value.line == line
    with pytest.raises(GraphFormatError):
        loads("")


def test_graph6():
    assert from_graph6("Bw") == complete(3)
    assert to_graph6(cycle(5)) == to_graph6(from_graph6(to_graph6(cycle(5))))
    with pytest.raises(ValueError):
        to_graph6(DOUBLED_TRIANGLE)


def test_is_forest():
    assert is_forest(star(3)) and is_forest(build(2, [(0, 1, 3)]))
    assert not is_forest(cycle(4))


@given(multigraphs(max_n=7))
def test_degree_sum_and_ore_le_vizing(g):
    assert sum(g.degrees()) == 2 * g.num_edges == 2 * len(g.edges())
    s = degree_stats(g)
    assert s.d_mu_max <= s.delta + s.mu
    assert max_mult(g) == s.mu


@given(multigraphs(max_n=7))
def test_star_subgraph_nesting(g):
    s = star_subgraphs(g)
    assert set(s.max_degree_mult.vertices) <= set(s.ore_tight.vertices) & set(s.max_degree.vertices)
    st_ = degree_stats(g)
    if st_.d_mu_max == st_.delta + st_.mu:
        assert s.ore_tight.vertices == s.max_degree_mult.vertices


@given(simple_graphs(max_n=6).filter(is_triangle_free), st.integers(1, 3))
def test_join_triangle_count(h, k):
    g = join(k, h)
    assert len(triangles(g)) == k * h.num_edges
    assert all(sum(1 for x in t if x < k) == 1 for t in triangles(g))
    assert all(g.mu(a, b) == 0 for a, b in combinations(range(k), 2))


@given(multigraphs(max_n=6))
def test_text_roundtrip(g):
    assert loads(dumps(g)) == g
