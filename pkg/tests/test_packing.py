import math

import pytest

from incdim import (WitnessCapExceeded, build_graph, e_critical_packing,
                    generate_family, has_unique_max_packing, is_packing,
                    max_packing, remove_edge)
from incdim.corpus import all_labeled_graphs, random_graphs

from .conftest import oracle_e_critical_size, oracle_max_packings


def test_is_packing_figure1(figure1):
    assert is_packing(figure1, {0, 3})
    assert not is_packing(figure1, {0, 4})   # common neighbor 1
    assert is_packing(figure1, set())
    assert is_packing(figure1, {2})


def test_is_packing_disconnected_counts_infinite():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert is_packing(g, {0, 2})


def test_rho_families():
    assert max_packing(generate_family("path", 6)).size == 2     # ceil(6/3)=2
    assert max_packing(generate_family("path", 7)).size == 3
    assert max_packing(generate_family("cycle", 7)).size == 2    # floor(7/3)
    for r in range(1, 4):
        for t in range(r, 4):
            assert max_packing(
                generate_family("complete_bipartite", r, t)).size == 1


def test_rho_path_ceil_n_over_3():
    for n in range(1, 13):
        assert max_packing(generate_family("path", n)).size == math.ceil(n / 3)


def test_figure2_packings(figure2):
    res = max_packing(figure2, enumerate_all=True)
    assert res.size == 6
    # a3, c1, c2, c3, d1, d2 in the fixture's labeling
    assert frozenset({2, 10, 11, 12, 13, 14}) in res.all_witnesses
    assert all(len(w) == 6 for w in res.all_witnesses)


def test_witness_is_lexicographically_smallest():
    for g in random_graphs(7, 40, seed=7):
        res = max_packing(g, enumerate_all=True)
        assert res.witness == min(res.all_witnesses, key=sorted)


def test_max_packing_matches_oracle_exhaustive():
    for n in (1, 2, 3, 4):
        for g in all_labeled_graphs(n):
            size, packs = oracle_max_packings(g)
            res = max_packing(g, enumerate_all=True)
            assert res.size == size
            assert set(res.all_witnesses) == set(packs)


def test_max_packing_matches_oracle_random():
    for n in (6, 7, 8):
        for g in random_graphs(n, 60, seed=100 + n):
            size, _ = oracle_max_packings(g)
            assert max_packing(g).size == size


def test_max_packing_is_independent_set():
    for g in random_graphs(8, 60, seed=5):
        w = max_packing(g).witness
        assert all(not ({u, v} <= w) for u, v in g.edges)


def test_witness_cap():
    # four disjoint triangles: 3^4 = 81 maximum packings
    edges = [(3 * i + a, 3 * i + b) for i in range(4)
             for a, b in ((0, 1), (1, 2), (0, 2))]
    g = build_graph(12, edges)
    with pytest.raises(WitnessCapExceeded, match="witness cap exceeded"):
        max_packing(g, enumerate_all=True, witness_cap=10)
    res = max_packing(g, enumerate_all=True)
    assert res.size == 4 and len(res.all_witnesses) == 81


def test_e_critical_figure1(figure1):
    res = e_critical_packing(figure1, (0, 1))
    assert res.size == 2
    assert max_packing(remove_edge(figure1, (0, 1))).size == 3  # > |P_e|
    assert res.contains_both_endpoints and not res.is_packing_of_g


def test_e_critical_c4():
    c4 = generate_family("cycle", 4)
    for e in c4.sorted_edges:
        res = e_critical_packing(c4, e)
        assert res.size == 2
        assert res.witness == frozenset(e)


def test_e_critical_missing_edge(figure1):
    with pytest.raises(ValueError, match="edge not in graph"):
        e_critical_packing(figure1, (0, 3))


def test_e_critical_matches_oracle():
    for n in (4, 5, 6):
        for g in random_graphs(n, 40, seed=200 + n):
            ge_cache = {}
            for e in g.sorted_edges:
                ge = remove_edge(g, e)
                assert e_critical_packing(g, e).size == \
                    oracle_e_critical_size(g, ge, e)


def test_bound_two_exhaustive():
    for n in (2, 3, 4, 5):
        for g in all_labeled_graphs(n):
            rho = max_packing(g).size
            for e in g.sorted_edges:
                res = e_critical_packing(g, e)
                assert rho <= res.size <= rho + 1
                assert res.size <= max_packing(remove_edge(g, e)).size


def test_one_endpoint_remark():
    # witness with exactly one endpoint u of e: N_G(v) meets it only at u
    for g in random_graphs(7, 60, seed=17):
        for e in g.sorted_edges:
            res = e_critical_packing(g, e)
            inside = res.witness & set(e)
            if len(inside) == 1:
                u = next(iter(inside))
                v = e[0] if e[1] == u else e[1]
                assert g.adj[v] & res.witness == {u}


def test_condition_one_flags():
    for g in random_graphs(6, 60, seed=23):
        for e in g.sorted_edges:
            res = e_critical_packing(g, e)
            if not res.contains_both_endpoints:
                assert res.is_packing_of_g


def test_unique_max_packing():
    assert not has_unique_max_packing(generate_family("path", 3))
    assert not has_unique_max_packing(generate_family("complete", 2))
    assert not has_unique_max_packing(
        generate_family("complete_bipartite", 1, 3))
    # P_4 and P_7 force the endpoints-and-every-third packing uniquely
    assert has_unique_max_packing(generate_family("path", 4))
    assert has_unique_max_packing(generate_family("path", 7))
