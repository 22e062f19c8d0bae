"""Structural fingerprints of a few named graphs.

The profile gathers everything the downstream statistics consume:
distances, clique number, cut vertices, bipartite/Eulerian flags, both
distance-regularity senses, the simple-cycle census, and the automorphism
group.
"""

from qgraphlab import (Graph, complete_bipartite, complete_graph, cycle_graph, path_graph,
                       automorphism_group, structure_profile)

prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                             (0, 3), (1, 4), (2, 5)])

zoo = [
    ("path P5", path_graph(5)),
    ("cycle C6", cycle_graph(6)),
    ("complete K5", complete_graph(5)),
    ("K3,3", complete_bipartite(3, 3)),
    ("triangular prism", prism),
]

for name, g in zoo:
    p = structure_profile(g)
    a = automorphism_group(g)
    print(f"{name}")
    print(f"  edges={p.edges} diameter={p.diameter} clique={p.clique_number} "
          f"bipartite={p.bipartite} eulerian={p.eulerian}")
    print(f"  distance regular: by distance distributions={p.distance_regular}, "
          f"strict={p.distance_regular_strict}")
    print(f"  cut vertices={list(p.cut_vertices)}  cycles by length={p.cycle_counts}  "
          f"shortest odd cycles={p.min_odd_cycle_count}")
    print(f"  |Aut|={a.group_size} orbits={[list(o) for o in a.orbits]}")
    print()

# The prism is the interesting case: every vertex sees the same distance
# distribution, yet the intersection-array condition fails.
