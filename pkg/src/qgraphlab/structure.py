"""Structural graph properties: distances, cliques, cut vertices,
bipartite/Eulerian flags, distance regularity, and the simple-cycle census.

All functions take the bitmask graphs from :mod:`qgraphlab.graphs` and are
pure, so per-graph invocations can run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, _bits, _popcount, is_connected

__all__ = [
    "DisconnectedGraphError",
    "StructureProfile",
    "all_pairs_distances",
    "diameter",
    "clique_number",
    "cut_vertices",
    "cut_vertices_by_deletion",
    "bipartite_test",
    "eulerian_test",
    "distance_regular_test",
    "cycle_census",
    "min_odd_cycle_count",
    "structure_profile",
]


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class StructureProfile:
    """Every non-symmetry property extracted for one graph.

    cycle_counts maps cycle length k (3..n) to the number of simple cycles
    of that length; cycle_basis holds the fundamental cycles of the BFS
    spanning tree rooted at vertex 0, each as a tuple of (u, v) edges.
    """

    edges: int
    diameter: int
    clique_number: int
    bipartite: bool
    eulerian: bool
    distance_regular: bool
    distance_regular_strict: bool
    cut_vertices: tuple[int, ...]
    cut_vertex_count: int
    degree_sequence: tuple[int, ...]
    cycle_counts: dict[int, int]
    cycle_basis: tuple[tuple[tuple[int, int], ...], ...]
    min_odd_cycle_count: int


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------


def _bfs_levels(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
        d += 1
        for v in _bits(frontier):
            dist[v] = d
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Shortest-path edge counts as an n x n integer matrix (BFS per vertex)."""
    if not is_connected(g):
        raise DisconnectedGraphError("all_pairs_distances requires a connected graph")
    return np.array([_bfs_levels(g, v) for v in range(g.n)], dtype=np.int64)


def diameter(g: Graph) -> int:
    return int(all_pairs_distances(g).max())


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Size of the largest complete subgraph (branch and bound on bitmasks)."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + _popcount(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, cand & g.adj[v])

    expand(0, (1 << g.n) - 1)
    return best


# ---------------------------------------------------------------------------
# Cut vertices
# ---------------------------------------------------------------------------


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points via the DFS lowpoint method, sorted ascending."""
    if not is_connected(g):
        raise DisconnectedGraphError("cut_vertices requires a connected graph")
    n = g.n
    num = [-1] * n
    low = [0] * n
    out: set[int] = set()
    counter = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal counter
        num[v] = low[v] = counter
        counter += 1
        children = 0
        for w in _bits(g.adj[v]):
            if num[w] == -1:
                children += 1
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if parent != -1 and low[w] >= num[v]:
                    out.add(v)
            elif w != parent:
                low[v] = min(low[v], num[w])
        if parent == -1 and children > 1:
            out.add(v)

    dfs(0, -1)
    return sorted(out)


def cut_vertices_by_deletion(g: Graph) -> list[int]:
    """Definitional check: v is a cut vertex iff deleting it disconnects the rest."""
    if not is_connected(g):
        raise DisconnectedGraphError("cut_vertices requires a connected graph")
    out = []
    full = (1 << g.n) - 1
    for v in range(g.n):
        alive = full ^ (1 << v)
        start = (alive & -alive).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= g.adj[u]
            frontier = grow & alive & ~seen
            seen |= frontier
        if seen != alive:
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# Boolean flags
# ---------------------------------------------------------------------------


def bipartite_test(g: Graph) -> bool:
    """True iff a BFS 2-coloring succeeds."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in _bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def eulerian_test(g: Graph) -> bool:
    """True iff g is connected and every vertex degree is even."""
    return is_connected(g) and all(_popcount(row) % 2 == 0 for row in g.adj)


def distance_regular_test(g: Graph, mode: str = "degree") -> bool:
    """Distance-regularity in one of two senses.

    mode="degree": every vertex has the identical distance-distribution
    vector (number of vertices at each distance 1..diameter).  This is the
    weaker distance-degree-regular condition.

    mode="strict": the intersection-array condition; for every pair u, v at
    distance i, the number of neighbors of v at distance i-1 and i+1 from u
    depends only on i.
    """
    if mode not in ("degree", "strict"):
        raise ValueError(f"mode must be 'degree' or 'strict', got {mode!r}")
    if not is_connected(g):
        raise DisconnectedGraphError("distance_regular_test requires a connected graph")
    dm = all_pairs_distances(g)
    d = int(dm.max())
    hist = np.stack([np.bincount(dm[v], minlength=d + 1) for v in range(g.n)])
    if (hist != hist[0]).any():
        return False
    if mode == "degree":
        return True
    # b_i / c_i must be pairwise-independent at every distance
    for i in range(d + 1):
        b = c = None
        for u in range(g.n):
            for v in range(g.n):
                if dm[u, v] != i:
                    continue
                bv = cv = 0
                for w in _bits(g.adj[v]):
                    if dm[u, w] == i + 1:
                        bv += 1
                    elif dm[u, w] == i - 1:
                        cv += 1
                if b is None:
                    b, c = bv, cv
                elif (bv, cv) != (b, c):
                    return False
    return True


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def _count_simple_cycles(g: Graph) -> dict[int, int]:
    """Count every simple cycle exactly once, keyed by length.

    Each cycle is enumerated from its minimum vertex; the two traversal
    directions are collapsed by requiring the second vertex on the path to
    be smaller than the last.
    """
    counts: dict[int, int] = {k: 0 for k in range(3, g.n + 1)}
    adj = g.adj
    path = [0] * (g.n + 1)

    def walk(root: int, v: int, depth: int, visited: int, allowed: int) -> None:
        for w in _bits(adj[v] & allowed & ~visited):
            path[depth] = w
            if adj[w] >> root & 1 and depth >= 2 and path[1] < w:
                counts[depth + 1] += 1
            walk(root, w, depth + 1, visited | (1 << w), allowed)

    for root in range(g.n):
        allowed = ~((1 << (root + 1)) - 1)  # only vertices above the root
        path[0] = root
        walk(root, root, 1, 1 << root, allowed)
    return counts


def _bfs_tree(g: Graph) -> list[int]:
    """Parents of the BFS spanning tree rooted at 0, neighbors in ascending order."""
    parent = [-1] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in _bits(g.adj[v]):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                queue.append(w)
    return parent


def _tree_path_to_root(v: int, parent: list[int]) -> list[int]:
    out = [v]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out


def cycle_census(g: Graph) -> tuple[dict[int, int], tuple[tuple[tuple[int, int], ...], ...]]:
    """Simple-cycle counts by length plus the fundamental cycle basis.

    The basis has one cycle per non-tree edge of the BFS spanning tree
    rooted at vertex 0 (neighbors visited in ascending order); each cycle
    is the tuple of its edges, normalized to (min, max) pairs, ordered
    along the traversal from one endpoint of the non-tree edge to the
    other.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("cycle_census requires a connected graph")
    counts = _count_simple_cycles(g)
    parent = _bfs_tree(g)
    tree_edges = {(min(v, parent[v]), max(v, parent[v])) for v in range(g.n) if parent[v] != -1}
    basis = []
    for u, v in g.edges():
        if (u, v) in tree_edges:
            continue
        up = _tree_path_to_root(u, parent)
        vp = _tree_path_to_root(v, parent)
        common = set(up) & set(vp)
        lca = next(x for x in up if x in common)
        path = up[: up.index(lca) + 1] + vp[: vp.index(lca)][::-1]
        edges = [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])]
        edges.append((min(u, v), max(u, v)))
        basis.append(tuple(edges))
    return counts, tuple(basis)


def min_odd_cycle_count(g: Graph, cycle_counts: dict[int, int] | None = None) -> int:
    """Number of shortest odd cycles (0 when bipartite)."""
    if cycle_counts is None:
        cycle_counts = _count_simple_cycles(g)
    for k in sorted(cycle_counts):
        if k % 2 == 1 and cycle_counts[k]:
            return cycle_counts[k]
    return 0


# ---------------------------------------------------------------------------
# Bundle
# ---------------------------------------------------------------------------


def structure_profile(g: Graph) -> StructureProfile:
    """Compute every structural property of one connected graph."""
    counts, basis = cycle_census(g)
    return StructureProfile(
        edges=g.edge_count,
        diameter=diameter(g),
        clique_number=clique_number(g),
        bipartite=bipartite_test(g),
        eulerian=eulerian_test(g),
        distance_regular=distance_regular_test(g, "degree"),
        distance_regular_strict=distance_regular_test(g, "strict"),
        cut_vertices=tuple(cut_vertices(g)),
        cut_vertex_count=len(cut_vertices(g)),
        degree_sequence=tuple(sorted(g.degrees(), reverse=True)),
        cycle_counts=counts,
        cycle_basis=basis,
        min_odd_cycle_count=min_odd_cycle_count(g, counts),
    )
