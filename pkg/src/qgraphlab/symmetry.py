"""Automorphism groups by exhaustive permutation search.

The search places vertex images one at a time, restricted to images of
equal degree and consistent adjacency with all previously mapped vertices,
which is an exhaustive scan of the n! permutations with pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, UnsupportedSizeError, _bits, _popcount

__all__ = ["AutomorphismSummary", "automorphisms", "automorphism_group", "orbit_count"]

MAX_GROUP_N = 8


@dataclass(frozen=True)
class AutomorphismSummary:
    """Size, generating set, and vertex orbits of one graph's automorphism group.

    Each generator is an image tuple (vertex v maps to generators[i][v]).
    The identity is never listed; a trivial group has no generators.
    Orbits are disjoint sorted tuples covering all vertices, ordered by
    their smallest element.
    """

    group_size: int
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[tuple[int, ...], ...]
    orbit_count: int


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All edge-preserving vertex relabelings, in lexicographic order."""
    if g.n > MAX_GROUP_N:
        raise UnsupportedSizeError(f"automorphism search supports n <= {MAX_GROUP_N}, got {g.n}")
    n, adj = g.n, g.adj
    deg = [_popcount(row) for row in adj]
    image = [-1] * n
    used = 0
    found: list[tuple[int, ...]] = []

    def place(v: int) -> None:
        nonlocal used
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if (adj[v] >> u & 1) != (adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                place(v + 1)
                used ^= 1 << w
        image[v] = -1

    place(0)
    return found


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a . b)(v) = a[b[v]]."""
    return tuple(a[x] for x in b)


def _closure(generators, n: int) -> set[tuple[int, ...]]:
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for gen in generators:
                q = _compose(gen, p)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


def automorphism_group(g: Graph) -> AutomorphismSummary:
    """Group size, a greedy-lexicographic generating set, and vertex orbits."""
    perms = automorphisms(g)
    n = g.n
    identity = tuple(range(n))

    generators: list[tuple[int, ...]] = []
    reached = {identity}
    for p in perms:
        if p == identity or p in reached:
            continue
        generators.append(p)
        reached = _closure(generators, n)
        if len(reached) == len(perms):
            break

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for v in range(n):
            rv, rw = find(v), find(p[v])
            if rv != rw:
                parent[rw] = rv
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    orbits = tuple(sorted((tuple(sorted(vs)) for vs in classes.values())))

    return AutomorphismSummary(
        group_size=len(perms),
        generators=tuple(generators),
        orbits=orbits,
        orbit_count=len(orbits),
    )


def orbit_count(g: Graph) -> int:
    """Number of vertex orbits under the automorphism group."""
    return automorphism_group(g).orbit_count
