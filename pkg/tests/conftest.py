"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's search machinery: plain
subset enumeration and pairwise definitions, so they stay valid even if
the solvers' shortcuts are wrong.
"""
from itertools import chain, combinations

import pytest

from incdim import build_graph
from incdim.graph import INFINITE


@pytest.fixture
def figure1():
    """5-vertex graph with the dashed edge (0,1): path 0-1-2-3 plus the
    pendant 4 on vertex 1."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


@pytest.fixture
def figure2():
    """15-vertex tree with two maximum packings whose symmetric
    difference induces an edge.  Spine a1..a7 = 0..6, stalks b/c at
    0, 3, 6, and pendants d1, d2 at the spine ends."""
    edges = [(i, i + 1) for i in range(6)]
    edges += [(0, 7), (3, 8), (6, 9)]        # a-b stalks
    edges += [(7, 10), (8, 11), (9, 12)]     # b-c stalks
    edges += [(0, 13), (6, 14)]              # pendants d1, d2
    return build_graph(15, edges)


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k)
                               for k in range(len(items) + 1))


def floyd_warshall(g):
    """Independent all-pairs distance oracle."""
    n = g.n
    d = [[0 if i == j else INFINITE for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            dik = d[i][k]
            if dik == INFINITE:
                continue
            for j in range(n):
                if dik + d[k][j] < d[i][j]:
                    d[i][j] = dik + d[k][j]
    return d


def oracle_is_packing(g, p):
    p = sorted(p)
    return all(g.dist[u][v] > 2 for i, u in enumerate(p) for v in p[i + 1:])


def oracle_max_packings(g):
    """All maximum 2-packings by full subset enumeration (small n only)."""
    best, out = 0, [frozenset()]
    for subset in powerset(range(g.n)):
        if oracle_is_packing(g, subset):
            if len(subset) > best:
                best, out = len(subset), [frozenset(subset)]
            elif len(subset) == best and subset:
                out.append(frozenset(subset))
    return best, out


def oracle_e_critical_size(g, ge, e):
    """Maximum feasible e-critical packing size by subset enumeration."""
    u, v = e
    best = 0
    for subset in powerset(range(g.n)):
        if not oracle_is_packing(ge, subset):
            continue
        if len({u, v} & set(subset)) < 2 and not oracle_is_packing(g, subset):
            continue
        best = max(best, len(subset))
    return best


def oracle_is_incidence_generator(g, s):
    """Literal pairwise definition of an incidence generator."""
    edges = sorted(g.edges)
    s = set(s)
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if not any((x in e) != (x in f) for x in s):
                return False
    return True


def oracle_dim_I(g):
    """Smallest generator size by ascending full subset search."""
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if oracle_is_incidence_generator(g, combo):
                return k
    raise AssertionError("V(G) must be a generator")
