import itertools
import random

import networkx as nx
import pytest

from qgraphlab.graphs import (Graph, UnsupportedSizeError, complete_graph, cycle_graph,
                              enumerate_connected, path_graph, relabel, star_graph)
from qgraphlab.symmetry import automorphism_group, automorphisms, orbit_count


def brute_force_automorphisms(g):
    """Filter all n! permutations on edge-set preservation."""
    edges = set(g.edges())
    out = []
    for perm in itertools.permutations(range(g.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
        if mapped == edges:
            out.append(perm)
    return out


def closure_size(generators, n):
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for gen in generators:
                q = tuple(gen[x] for x in p)
                if q not in group:
                    group.add(q)
                    new.append(q)
        frontier = new
    return len(group)


class TestAutomorphisms:
    def test_matches_brute_force(self):
        for g in enumerate_connected(5):
            assert automorphisms(g) == sorted(brute_force_automorphisms(g))

    def test_c4(self):
        summary = automorphism_group(cycle_graph(4))
        assert summary.group_size == 8
        assert summary.orbit_count == 1

    def test_k4(self):
        summary = automorphism_group(complete_graph(4))
        assert summary.group_size == 24
        assert summary.orbit_count == 1

    def test_star(self):
        summary = automorphism_group(star_graph(4))
        assert summary.group_size == 6
        assert summary.orbits == ((0,), (1, 2, 3))
        assert summary.orbit_count == 2

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            automorphisms(Graph(9, (0,) * 9))


class TestGroupStructure:
    def test_identity_always_present(self):
        for g in enumerate_connected(4):
            perms = automorphisms(g)
            assert tuple(range(4)) in perms
            assert len(perms) >= 1

    def test_group_size_divides_factorial(self):
        import math
        for g in enumerate_connected(5):
            assert math.factorial(5) % automorphism_group(g).group_size == 0

    def test_generator_closure(self):
        for n in (4, 5, 6):
            for g in enumerate_connected(n):
                summary = automorphism_group(g)
                assert closure_size(summary.generators, n) == summary.group_size

    def test_generator_closure_sampled_large(self):
        rng = random.Random(23)
        sample = rng.sample(enumerate_connected(7), 40) + rng.sample(enumerate_connected(8), 40)
        for g in sample:
            summary = automorphism_group(g)
            assert closure_size(summary.generators, g.n) == summary.group_size

    def test_trivial_group_has_no_generators(self):
        asym = next(g for g in enumerate_connected(6)
                    if len(brute_force_automorphisms(g)) == 1)
        summary = automorphism_group(asym)
        assert summary.group_size == 1
        assert summary.generators == ()
        assert summary.orbit_count == 6

    def test_vs_networkx_group_size(self):
        for g in random.Random(3).sample(enumerate_connected(6), 20):
            G = nx.Graph()
            G.add_nodes_from(range(g.n))
            G.add_edges_from(g.edges())
            matcher = nx.algorithms.isomorphism.GraphMatcher(G, G)
            assert sum(1 for _ in matcher.isomorphisms_iter()) == automorphism_group(g).group_size


class TestOrbits:
    def test_vertex_transitive(self):
        assert orbit_count(cycle_graph(7)) == 1

    def test_path_has_two(self):
        assert orbit_count(path_graph(4)) == 2

    def test_orbits_partition_and_degree(self):
        for g in enumerate_connected(5):
            summary = automorphism_group(g)
            all_vertices = sorted(v for orbit in summary.orbits for v in orbit)
            assert all_vertices == list(range(5))
            for orbit in summary.orbits:
                assert len({g.degree(v) for v in orbit}) == 1

    def test_invariant_under_relabeling(self):
        rng = random.Random(11)
        for g in rng.sample(enumerate_connected(6), 10):
            base = automorphism_group(g)
            perm = list(range(6))
            rng.shuffle(perm)
            other = automorphism_group(relabel(g, perm))
            assert other.group_size == base.group_size
            assert other.orbit_count == base.orbit_count
            assert sorted(len(o) for o in other.orbits) == sorted(len(o) for o in base.orbits)
