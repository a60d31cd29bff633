from __future__ import annotations

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs
from edgecolor.coloring import is_proper
from edgecolor.exact import (all_maximal_subgraphs, audit_certificate, certificate_for,
                             certificate_from_coloring, chromatic_index, decide_k_colorable,
                             is_k_colorable, maximal_colorable_subgraph, shuffled_order)
from edgecolor.graph import (build, complete, cycle, d_mu_max, degree_stats, empty, path,
                             random_multigraph)


def test_decide_examples():
    assert decide_k_colorable(complete(3), 2) is None
    c = decide_k_colorable(complete(3), 3)
    assert c is not None and c.is_total() and is_proper(c)
    assert decide_k_colorable(cycle(5), 2) is None
    assert decide_k_colorable(cycle(5), 3) is not None


def test_chromatic_index_examples():
    assert chromatic_index(complete(3)) == 3
    assert chromatic_index(complete(4)) == 3
    assert chromatic_index(path(3)) == 2
    assert chromatic_index(empty(3)) == 0
    assert chromatic_index(build(2, [(0, 1, 3)])) == 3


def test_chromatic_index_known_values():
    import networkx as nx
    from edgecolor.graph import from_networkx
    assert chromatic_index(from_networkx(nx.petersen_graph())) == 4
    assert chromatic_index(complete(5)) == 5
    # Shannon multigraph: each pair doubled in a triangle needs 6 colors
    assert chromatic_index(build(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)])) == 6


def test_maximal_examples():
    cert = maximal_colorable_subgraph(complete(3), 1)
    assert len(cert.coloring.colors) == 1 and len(cert.uncolored) == 2 and cert.certified
    g = build(3, [(0, 1, 2), (1, 2, 1), (0, 2, 1)])
    cert = maximal_colorable_subgraph(g, d_mu_max(g))
    assert cert.coloring.is_total() and cert.uncolored == ()
    cert = maximal_colorable_subgraph(cycle(5), 2)
    assert len(cert.coloring.colors) == 4 and audit_certificate(cert)


def test_certificate_for_rejects_bad_input():
    with pytest.raises(ValueError):
        certificate_for(complete(3), 2, complete(3))
    with pytest.raises(ValueError):
        certificate_for(path(3), 2, complete(3))


def test_certificate_flags_nonmaximal():
    cert = certificate_for(cycle(5), 2, empty(5))
    assert not cert.certified and not audit_certificate(cert)


@given(multigraphs(max_n=5, max_mult=2, max_edges=7), st.integers(1, 4))
def test_decide_matches_bruteforce(g, k):
    c = decide_k_colorable(g, k)
    assert (c is not None) == oracles.colorable(g, k)
    if c is not None:
        assert c.is_total() and is_proper(c) and c.k == k


@given(multigraphs(max_n=5, max_mult=2, max_edges=6))
def test_chromatic_index_bruteforce(g):
    assert chromatic_index(g) == oracles.chromatic_index(g)


@given(multigraphs(max_n=7, max_mult=3), st.integers(1, 6))
def test_decide_monotone_and_bounds(g, k):
    if is_k_colorable(g, k):
        assert is_k_colorable(g, k + 1)
    if g.num_edges:
        s = degree_stats(g)
        assert s.delta <= chromatic_index(g) <= s.d_mu_max <= s.delta + s.mu


@given(multigraphs(max_n=4, max_mult=2, max_edges=6), st.integers(1, 3))
def test_all_maximal_matches_bruteforce(g, k):
    got = {tuple(sorted(((v, w), m.mu(v, w)) for v, w, _ in g.pairs()))
           for m in all_maximal_subgraphs(g, k)}
    assert got == oracles.maximal_subgraphs(g, k)


@given(multigraphs(max_n=7, max_mult=3), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_maximal_certificate_audit(g, k, seed):
    for mode in ("certificate", "greedy"):
        cert = maximal_colorable_subgraph(g, k, shuffled_order(g, seed), mode=mode)
        assert is_proper(cert.coloring)
        assert set(cert.coloring.colors) | set(cert.uncolored) == set(g.edges())
    cert = maximal_colorable_subgraph(g, k, shuffled_order(g, seed))
    assert cert.certified and audit_certificate(cert)
    again = certificate_from_coloring(cert.coloring)
    assert again.certified


def test_maximal_deterministic():
    g = random_multigraph(5, 8, 3, 0.6)
    a = maximal_colorable_subgraph(g, 4, shuffled_order(g, 9))
    b = maximal_colorable_subgraph(g, 4, shuffled_order(g, 9))
    assert a.coloring.colors == b.coloring.colors
