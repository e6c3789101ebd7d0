"""Incidence resolution predicates and the exact dimension solvers.

Two routes compute the same parameter: a direct subset search over
candidate generators, and the structural route through e-critical
packings (value = n - max_e |P_e|).  Closed formulas cover the four
standard families.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import _normalize_edge, is_connected
from .packing import (DEFAULT_WITNESS_CAP, e_critical_packing, max_packing)

CLASS_MINUS_ONE = "CLASS_MINUS_ONE"   # dim_I = n - rho - 1
CLASS_EXACT = "CLASS_EXACT"           # dim_I = n - rho


@dataclass(frozen=True)
class DimResult:
    value: int
    basis: frozenset
    method: str                 # "brute", "structural" or "formula"
    achieving_edge: tuple = None


def resolves(g, x, e, f):
    """True iff x is an endpoint of exactly one of the edges e, f."""
    e = _normalize_edge(e)
    f = _normalize_edge(f)
    if e == f:
        raise ValueError("identical edges")
    for edge in (e, f):
        if edge not in g.edges:
            raise ValueError(f"edge not in graph: {edge}")
    if not 0 <= x < g.n:
        raise ValueError(f"vertex out of range: {x}")
    return (x in e) != (x in f)


def _is_generator_mask(edge_masks, smask):
    # Two edges are unresolved by S exactly when their endpoint sets
    # intersected with S coincide, so S is a generator iff the map
    # e -> e & S is injective over edges.
    seen = set()
    for em in edge_masks:
        sig = em & smask
        if sig in seen:
            return False
        seen.add(sig)
    return True


def _edge_masks(g):
    return [(1 << u) | (1 << v) for u, v in g.sorted_edges]


def is_incidence_generator(g, s):
    """True iff every pair of distinct edges is resolved by some vertex
    of s."""
    smask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex out of range: {v}")
        smask |= 1 << v
    return _is_generator_mask(_edge_masks(g), smask)


def dim_I_brute(g, full_search=False):
    """Exact dimension by direct subset search.

    By default the search only visits the two sizes allowed by the
    packing-number sandwich; full_search restarts from size 0 and
    assumes nothing, for oracle-grade independence.
    """
    if g.m <= 1:
        return DimResult(value=0, basis=frozenset(), method="brute")
    edge_masks = _edge_masks(g)
    if full_search:
        lo = 0
    else:
        rho = max_packing(g).size
        lo = max(0, g.n - rho - 1)
    for size in range(lo, g.n + 1):
        for combo in combinations(range(g.n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if _is_generator_mask(edge_masks, smask):
                return DimResult(value=size, basis=frozenset(combo),
                                 method="brute")
    raise AssertionError("unreachable: V(G) is always a generator")


def dim_I_structural(g):
    """Exact dimension as n - k with k the best e-critical packing size.

    The basis is the complement of the witness of the first achieving
    edge (edges scanned in ascending order)."""
    if g.m == 0:
        raise ValueError("structural method requires an edge")
    best = None
    for e in g.sorted_edges:
        res = e_critical_packing(g, e)
        if best is None or res.size > best.size:
            best = res
    basis = frozenset(range(g.n)) - best.witness
    if not is_incidence_generator(g, basis):
        raise AssertionError(
            f"structural basis failed the generator check: {sorted(basis)}")
    return DimResult(value=g.n - best.size, basis=basis,
                     method="structural", achieving_edge=best.edge)


def dim_I_formula(family, *params):
    """Closed-formula dimension for the four standard families."""
    if family == "complete":
        (n,) = params
        if n < 3:
            raise ValueError("formula domain violated: complete needs n >= 3")
        return n - 1
    if family == "path":
        (n,) = params
        if n < 3:
            raise ValueError("formula domain violated: path needs n >= 3")
        return (2 * (n - 1)) // 3
    if family == "cycle":
        (n,) = params
        if n < 4:
            raise ValueError("formula domain violated: cycle needs n >= 4")
        return (2 * n) // 3
    if family == "complete_bipartite":
        r, t = params
        if r < 1 or t < 1:
            raise ValueError("formula domain violated: "
                             "complete_bipartite needs r,t >= 1")
        return r + t - 2
    raise ValueError(f"formula domain violated: unknown family {family!r}")


def classify(g):
    """Partition label: CLASS_MINUS_ONE when dim_I = n - rho - 1,
    CLASS_EXACT when dim_I = n - rho."""
    rho = max_packing(g).size
    if g.m == 0:
        value = 0
    else:
        value = dim_I_structural(g).value
    if value == g.n - rho - 1:
        return CLASS_MINUS_ONE
    if value == g.n - rho:
        return CLASS_EXACT
    raise AssertionError(
        f"dim_I={value} outside the sandwich for n={g.n}, rho={rho}")


def check_symdiff_condition(g, witness_cap=DEFAULT_WITNESS_CAP):
    """Look for two maximum packings whose symmetric difference induces
    an edge.

    Returns a dict with the class label and the first witness pair in
    lexicographic order, or None when no pair qualifies.
    """
    res = max_packing(g, enumerate_all=True, witness_cap=witness_cap)
    witness_pair = None
    packs = res.all_witnesses
    for i, p1 in enumerate(packs):
        if witness_pair:
            break
        for p2 in packs[i + 1:]:
            sym = p1 ^ p2
            if any(u in sym and v in sym for u, v in g.edges):
                witness_pair = (p1, p2)
                break
    return {"class": classify(g), "witness_pair": witness_pair}


def common_neighbor_characterization(g):
    """True iff every pair of distinct vertices has a common neighbor.

    Only defined for connected graphs with at least two edges, where it
    characterizes dim_I = n - 1."""
    if not is_connected(g) or g.m < 2:
        raise ValueError("characterization requires connected, >=2 edges")
    return all(g.adj[u] & g.adj[v]
               for u in range(g.n) for v in range(u + 1, g.n))
