"""Immutable simple graphs with precomputed all-pairs distances.

Vertices are dense integers 0..n-1. Distances between vertices in
different components are INFINITE, which compares greater than any
finite hop count, so distance predicates work uniformly on
disconnected graphs.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

INFINITE = math.inf


def _normalize_edge(e):
    u, v = e
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; construct through build_graph."""

    n: int
    edges: frozenset  # frozenset of (u, v) tuples with u < v
    dist: tuple       # n x n tuple of tuples, hop distances

    @cached_property
    def adj(self):
        """Open neighborhoods as a tuple of frozensets."""
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self):
        """Open neighborhoods as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def ball2_masks(self):
        """For each v: bitmask of v itself plus all u with d(u,v) <= 2."""
        masks = []
        for v in range(self.n):
            m = 1 << v
            row = self.dist[v]
            for u in range(self.n):
                if u != v and row[u] <= 2:
                    m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def sorted_edges(self):
        return tuple(sorted(self.edges))

    @property
    def m(self):
        return len(self.edges)

    def has_edge(self, u, v):
        return (u, v) in self.edges if u < v else (v, u) in self.edges


def _bfs_row(n, adj, src):
    row = [INFINITE] * n
    row[src] = 0
    q = deque([src])
    while q:
        x = q.popleft()
        d = row[x] + 1
        for y in adj[x]:
            if row[y] == INFINITE:
                row[y] = d
                q.append(y)
    return tuple(row)


def _distances(n, edges):
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(_bfs_row(n, nbrs, s) for s in range(n))


def build_graph(n, edge_list):
    """Build a Graph on n vertices from an iterable of vertex pairs.

    Edges are deduplicated; self-loops and out-of-range endpoints are
    rejected.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    edges = set()
    for e in edge_list:
        u, v = _normalize_edge(e)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge ({u}, {v})")
        edges.add((u, v))
    return Graph(n=n, edges=frozenset(edges), dist=_distances(n, edges))


def neighbors(g, v):
    """Open neighborhood N(v) as a frozenset."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex out of range: {v}")
    return g.adj[v]


def remove_edge(g, e):
    """Return a new graph with edge e removed and distances recomputed."""
    e = _normalize_edge(e)
    if e not in g.edges:
        raise ValueError(f"edge not in graph: {e}")
    edges = g.edges - {e}
    return Graph(n=g.n, edges=edges, dist=_distances(g.n, edges))


def induced_subgraph(g, d):
    """Subgraph induced by vertex set d, relabeled 0..|d|-1 in ascending
    order of the original labels."""
    verts = sorted(d)
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex out of range: {v}")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges
             if u in index and v in index]
    return build_graph(len(verts), edges)


def is_edge_triangular(g):
    """True iff every edge lies in at least one triangle."""
    return all(g.adj[u] & g.adj[v] for u, v in g.edges)


def is_connected(g):
    if g.n <= 1:
        return True
    return all(d != INFINITE for d in g.dist[0])


# ---------------------------------------------------------------------------
# named families

def _path(n):
    if n < 1:
        raise ValueError("family parameters invalid: path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n):
    if n < 3:
        raise ValueError("family parameters invalid: cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n):
    if n < 1:
        raise ValueError("family parameters invalid: complete needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(r, t):
    if r < 1 or t < 1:
        raise ValueError("family parameters invalid: "
                         "complete_bipartite needs r,t >= 1")
    return build_graph(r + t, [(i, r + j) for i in range(r) for j in range(t)])


def _grn(r, n):
    # Clique u_1..u_r = vertices 0..r-1, pendants v_i = r-1+i, w = 2r.
    if not (n % 2 == 1 and r == n // 2 and r >= 3):
        raise ValueError("family parameters invalid: "
                         "grn needs odd n, r = n//2, r >= 3")
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    edges += [(i, r + i) for i in range(r)]       # u_i v_i
    edges.append((r, 2 * r))                      # v_1 w
    return build_graph(2 * r + 1, edges)


def _gprime_rn(r, n):
    # Clique u_1..u_r = vertices 0..r-1, v_i = r-1+i for i=1..n-r.
    # Valid exactly when the hub v_{n-r} has someone to attach to,
    # i.e. n-r <= r; for odd n with r = n//2 the sibling family grn applies.
    if not (r >= 3 and n - r <= r and r < n - 1):
        raise ValueError("family parameters invalid: "
                         "gprime_rn needs 3 <= max(3, ceil(n/2)) <= r <= n-2")
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    edges += [(i, r + i) for i in range(n - r - 1)]          # u_i v_i
    hub = n - 1                                              # v_{n-r}
    edges += [(i, hub) for i in range(n - r - 1, r)]         # v_{n-r} u_i
    edges.append((r, r + 1))                                 # v_1 v_2
    return build_graph(n, edges)


FAMILIES = {
    "path": _path,
    "cycle": _cycle,
    "complete": _complete,
    "complete_bipartite": _complete_bipartite,
    "grn": _grn,
    "gprime_rn": _gprime_rn,
}


def generate_family(family, *params):
    """Build a named family graph.

    Families: path(n), cycle(n), complete(n), complete_bipartite(r, t),
    grn(r, n) and gprime_rn(r, n).  The grn/gprime_rn constructions put
    the clique vertices u_1..u_r first (0..r-1), then the pendant
    vertices v_1..v_k in order, with the extra vertex w last for grn.
    """
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ValueError(f"family parameters invalid: unknown family "
                         f"{family!r}") from None
    return builder(*params)


# ---------------------------------------------------------------------------
# edge-list interchange format

def parse_edge_list(text):
    """Parse the canonical edge-list text format.

    Line 1 is `n m`, then m lines `u v`; `#` starts a comment, blank
    lines are ignored.  Raises ValueError with the offending line
    number on malformed input.
    """
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}")
        if header is None:
            if len(nums) != 2:
                raise ValueError(f"line {lineno}: header must be 'n m'")
            header = nums
        else:
            if len(nums) != 2:
                raise ValueError(f"line {lineno}: edge line must be 'u v'")
            pairs.append((nums[0], nums[1], lineno))
    if header is None:
        raise ValueError("line 1: missing 'n m' header")
    n, m = header
    if len(pairs) != m:
        raise ValueError(f"header declares {m} edges, found {len(pairs)}")
    edges = []
    for u, v, lineno in pairs:
        try:
            edges.append(_normalize_edge((u, v)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range")
    return build_graph(n, edges)


def format_edge_list(g, comments=()):
    """Serialize a graph to the edge-list format (edges sorted, u < v)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path):
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g, path, comments=()):
    with open(path, "w") as fh:
        fh.write(format_edge_list(g, comments))
