"""Graph corpora for verification: exhaustive labeled enumeration,
seeded Erdos-Renyi samples and random labeled trees."""
from __future__ import annotations

import random
from itertools import combinations

from .graph import build_graph

EDGE_PROBABILITIES = (0.2, 0.5, 0.8)


def all_labeled_graphs(n):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if (mask >> i) & 1]
        yield build_graph(n, edges)


def random_graph(n, p, rng):
    """One G(n, p) draw from the given random.Random stream."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return build_graph(n, edges)


def random_graphs(n, count, seed):
    """count seeded G(n, p) graphs; p cycles through EDGE_PROBABILITIES
    per index, all draws taken from one random.Random(seed) stream."""
    rng = random.Random(seed)
    for i in range(count):
        p = EDGE_PROBABILITIES[i % len(EDGE_PROBABILITIES)]
        yield random_graph(n, p, rng)


def random_tree(n, rng):
    """Uniform random labeled tree on n vertices via a Pruefer sequence."""
    if n <= 1:
        return build_graph(n, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return build_graph(n, edges)


def nonisomorphic_trees(n):
    """All non-isomorphic trees on n vertices (delegated to networkx)."""
    import networkx as nx

    if n == 1:
        yield build_graph(1, [])
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for t in nx.nonisomorphic_trees(n):
        yield build_graph(n, list(t.edges()))
