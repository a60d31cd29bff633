from __future__ import annotations

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs
from edgecolor.coloring import PartialColoring
from edgecolor.deficiency import check_theorem_main, local_sets
from edgecolor.exact import (MaximalSubgraphCertificate, certificate_for,
                             maximal_colorable_subgraph, shuffled_order)
from edgecolor.graph import build, complete, simple
from edgecolor.kostochka import (AuxDigraph, build_aux, certificate_invariants,
                                 certificate_slack, certificates, dump_aux, reachable,
                                 remote_vertices, verify_lemma_disjoint, verify_lemma_oy,
                                 verify_lemma_path)


def _k4_minus_edge():
    # K4 minus 23, k=2, M a perfect matching plus one more edge
    g = simple(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    cert = maximal_colorable_subgraph(g, 2)
    return g, cert


def test_build_aux_no_colored_neighbors():
    cert = certificate_for(complete(3), 1, build(3, [(0, 1, 1)]))
    # vertex 2 has d_M = 0 but both neighbors are saturated: nothing in U
    assert local_sets(cert, 2)[1] == set()
    g = simple(2, [(0, 1)])
    weak = MaximalSubgraphCertificate(PartialColoring(g, 1, {}), ((0, 1, 0),), (False,))
    h = build_aux(weak, 0, 1)
    assert h.vertices == (1,) and h.arcs == {} and reachable(h) == {1}


def test_build_aux_rejects_non_u():
    g, cert = _k4_minus_edge()
    for y in g.vertices:
        if cert.coloring.d_M(y) < 2:
            Uk = local_sets(cert, y)[1]
            other = [w for w in g.vertices if w not in Uk][0]
            with pytest.raises(ValueError):
                build_aux(cert, y, other)
            break


def test_reachable_chain():
    h = AuxDigraph(0, 1, (1, 2, 3, 4), {(1, 2): 1, (2, 3): 2})
    assert reachable(h) == {1, 2, 3}


def test_arcs_match_set_intersection():
    g, cert = _k4_minus_edge()
    col = cert.coloring
    for y in g.vertices:
        if col.d_M(y) >= 2:
            continue
        for u in local_sets(cert, y)[1]:
            h = build_aux(cert, y, u)
            assert set(h.vertices) == col.neighbors_M(y) | {u}
            for w in h.vertices:
                for z in h.vertices:
                    if w != z:
                        want = len(col.missing(w) & col.between(y, z))
                        assert h.arcs.get((w, z), 0) == want


def test_certificate_examples():
    g, cert = _k4_minus_edge()
    col = cert.coloring
    for y in g.vertices:
        if col.d_M(y) >= 2:
            continue
        cm = certificates(cert, y)
        assert cm.C[y] == col.missing(y) and cm.C[y]
        for w, cs in cm.C.items():
            if w in cm.remote:
                assert cs == col.between(y, w)
            elif w != y:
                assert cs == col.missing(w) and len(cs) == 2 - col.d_M(w)
        if not local_sets(cert, y)[1]:
            assert remote_vertices(cert, y) == col.neighbors_M(y)
    assert "cert" in dump_aux(cert, next(y for y in g.vertices if col.d_M(y) < 2))


def test_lemmas_vacuous_without_u():
    cert = certificate_for(complete(3), 1, build(3, [(0, 1, 1)]))
    assert verify_lemma_oy(cert, 2) and verify_lemma_path(cert, 2) and verify_lemma_disjoint(cert, 2)


def test_negative_control_fails_a_lemma():
    # drop the only edge of a single-edge graph at k=1: u shares a missing color with y
    g = simple(2, [(0, 1)])
    weak = MaximalSubgraphCertificate(PartialColoring(g, 1, {}), ((0, 1, 0),), (False,))
    fails = []
    assert not verify_lemma_oy(weak, 0, fails) and fails


@given(multigraphs(max_n=5, max_mult=2), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_lemmas_on_maximal(g, k, seed):
    cert = maximal_colorable_subgraph(g, k, shuffled_order(g, seed))
    main = {r.v: r for r in check_theorem_main(cert).records}
    for y in g.vertices:
        if cert.coloring.d_M(y) >= k:
            continue
        assert verify_lemma_oy(cert, y)
        assert verify_lemma_path(cert, y)
        assert verify_lemma_disjoint(cert, y)
        assert not certificate_invariants(cert, y)
        assert certificate_slack(cert, y) == main[y].main_slack
        Uk = local_sets(cert, y)[1]
        hit = set()
        for u in Uk:
            h = build_aux(cert, y, u)
            r = reachable(h)
            assert r == oracles.closure(h.vertices, list(h.arcs), u)
            hit |= r
        assert remote_vertices(cert, y) == cert.coloring.neighbors_M(y) - hit
