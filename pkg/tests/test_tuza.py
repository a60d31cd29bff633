from __future__ import annotations

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import simple_graphs
from edgecolor.graph import complete, complete_bipartite, cycle, empty, join, simple, star
from edgecolor.tuza import (ScaleError, TuzaInstance, all_k_optimal_sets, alpha_prime_k,
                            check_alphi, conjecture_kcover_search, cover_to_set,
                            degree_constrained_subgraph, is_k_dependent, is_k_dominating,
                            is_triangle_free, k_cover_subgraph, max_triangle_packing,
                            min_triangle_cover, nu_exact, packing_to_coloring, phi_k, phi_value,
                            reduce_to_k_dependent, set_to_cover, tau_exact, tau_nu_join)

triangle_free = simple_graphs(max_n=6).filter(is_triangle_free)


def test_triangle_free_examples():
    assert is_triangle_free(cycle(5))
    assert not is_triangle_free(complete(3))
    assert is_triangle_free(complete_bipartite(3, 3))


def test_phi_examples():
    assert phi_k(complete(3), 1)[0] == 1
    assert phi_k(complete(3), 2)[0] == 3
    assert phi_k(empty(4), 3)[0] == 12
    assert phi_k(cycle(5), 1)[0] == 2


def test_reduction_examples():
    D = reduce_to_k_dependent(cycle(5), 3, range(5))
    assert D == set(range(5))
    D = reduce_to_k_dependent(complete(3), 1, range(3))
    assert len(D) == 1 and phi_value(complete(3), 1, D) == 1
    D = reduce_to_k_dependent(star(5), 1, range(6))
    assert is_k_dependent(star(5), 1, D) and phi_value(star(5), 1, D) >= 1


def test_alpha_examples():
    assert alpha_prime_k(complete(3), 1)[0] == 1
    assert alpha_prime_k(cycle(5), 2)[0] == 4
    assert alpha_prime_k(complete(4), 3)[0] == 6


def test_tau_nu_examples():
    assert (tau_exact(cycle(5)), nu_exact(cycle(5))) == (0, 0)
    assert (tau_exact(complete(4)), nu_exact(complete(4))) == (2, 1)
    assert (tau_exact(complete(3)), nu_exact(complete(3))) == (1, 1)


def test_join_formula_examples():
    assert tau_nu_join(TuzaInstance(1, complete(2))) == (1, 1)
    assert tau_nu_join(TuzaInstance(2, empty(1))) == (0, 0)
    assert tau_nu_join(TuzaInstance(1, cycle(5))) == (3, 2)
    with pytest.raises(ValueError):
        TuzaInstance(1, complete(3))


def test_check_alphi_examples():
    assert check_alphi(empty(3), 2).ok
    r = check_alphi(complete(3), 1)
    assert (r.alpha, r.phi, r.rhs) == (1, 1, 2) and r.ok and r.tight


def test_conjecture_examples():
    res = conjecture_kcover_search(cycle(5), 1)
    assert not res.counterexample and len(res.optimal_sets) == 5
    res = conjecture_kcover_search(empty(3), 2)
    assert res.optimal_sets == [(0, 1, 2)] and res.witnesses[(0, 1, 2)] == {}


def test_dcs_examples():
    assert degree_constrained_subgraph(cycle(5), 2, range(5)) is not None
    M = degree_constrained_subgraph(cycle(5), 1, (0, 2))
    assert M is not None and len(M) == 2
    assert degree_constrained_subgraph(star(3), 1, ()) is None


def test_scale_guards():
    with pytest.raises(ScaleError):
        alpha_prime_k(complete(12), 2)


@given(simple_graphs(max_n=7), st.integers(1, 3))
def test_phi_matches_bruteforce(g, k):
    value, wit = phi_k(g, k)
    assert value == oracles.phi(g, k) == oracles.phi_dependent(g, k)
    assert wit.value == value == phi_value(g, k, wit.D)
    assert wit.k_dependent and wit.k_dominating
    for D in all_k_optimal_sets(g, k):
        assert phi_value(g, k, D) == value and is_k_dependent(g, k, D) and is_k_dominating(g, k, D)


@given(simple_graphs(max_n=6, max_edges=8), st.integers(1, 3))
def test_alpha_matches_bruteforce(g, k):
    size, col = alpha_prime_k(g, k)
    assert size == oracles.alpha_prime(g, k) == len(col)
    assert oracles.proper(col)


@given(simple_graphs(max_n=6, max_edges=9))
def test_tau_nu_match_bruteforce(g):
    assert len(min_triangle_cover(g)) == oracles.tau(g)
    assert len(max_triangle_packing(g)) == oracles.nu(g)


@given(triangle_free, st.integers(1, 3))
def test_join_formulas_and_constructions(h, k):
    tau, nu = tau_nu_join(TuzaInstance(k, h))
    g = join(k, h)
    assert (tau, nu) == (tau_exact(g), nu_exact(g))
    assert nu <= tau <= 2 * nu
    colors = packing_to_coloring(k, h, max_triangle_packing(g))
    assert len(colors) == nu and oracles.proper({(a, b, 0): c for (a, b), c in colors.items()})
    D = cover_to_set(k, h, min_triangle_cover(g))
    assert k * h.n - phi_value(h, k, D) <= tau
    X = set(set_to_cover(k, h, phi_k(h, k)[1].D))
    assert len(X) == tau
    assert all({(a, b), (a, c), (b, c)} & X for a, b, c in oracles.triangles(g))


@given(simple_graphs(max_n=7), st.integers(1, 3), st.data())
def test_reduction_monotone(g, k, data):
    T = data.draw(st.sets(st.sampled_from(list(range(g.n)))))
    D = reduce_to_k_dependent(g, k, T)
    assert D <= T and is_k_dependent(g, k, D) and phi_value(g, k, D) >= phi_value(g, k, T)


@given(simple_graphs(max_n=6, max_edges=8), st.integers(1, 2), st.data())
def test_dcs_and_kcover_match_bruteforce(g, k, data):
    D = data.draw(st.sets(st.sampled_from(list(range(g.n)))))
    M = degree_constrained_subgraph(g, k, D)
    assert (M is not None) == oracles.degree_subgraph_exists(g, k, D)
    if M is not None:
        deg = [0] * g.n
        for a, b in M:
            assert g.mu(a, b)
            deg[a] += 1
            deg[b] += 1
        assert all(d <= k for d in deg) and all(deg[v] == k for v in g.vertices if v not in D)
    W = k_cover_subgraph(g, k, D)
    assert (W is not None) == oracles.kcover_exists(g, k, D)


@given(simple_graphs(max_n=7), st.integers(1, 2))
def test_proposition_on_optimal_sets(g, k):
    for D in all_k_optimal_sets(g, k):
        assert degree_constrained_subgraph(g, k, D) is not None


@given(simple_graphs(max_n=8), st.integers(1, 3))
def test_alphi_inequality(g, k):
    assert check_alphi(g, k).ok


def test_matching_case_of_conjecture():
    g = simple(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    res = conjecture_kcover_search(g, 1)
    assert not res.counterexample
