"""
Finding K_t minors and checking the certificates
=================================================

A K_t minor is witnessed by t disjoint connected branch sets that touch
pairwise.  This script runs the exact search on a few small graphs, checks
each certificate, and compares against the brute-force oracle.
"""
import itertools

import numpy as np

from kminors import Graph, brute_force_t_cluster, find_t_cluster, validate_cluster
from kminors.constructions import gen_complete_bipartite, gen_geodesic

##############################################################################
# K_{3,3} has a K4 minor: pair up two x-y edges and keep the rest as singletons.

k33, bip = gen_complete_bipartite(3, 3)
res = find_t_cluster(k33, 4)
print("K_{3,3}, t=4:", res.status, [sorted(x) for x in res.cluster])
print("  certificate valid:", bool(validate_cluster(k33, res.cluster, 4)))

##############################################################################
# A rejected certificate names the first thing that went wrong.

path = Graph.path(6)
print("path, six singletons:", validate_cluster(path, [{v} for v in range(6)], 6))

##############################################################################
# The icosahedron is planar, so it has no K5 minor.  The search has to prove
# that by exhaustion; the oracle enumerates every connected vertex subset.

ico = gen_geodesic(1)
res = find_t_cluster(ico, 5)
print(f"icosahedron, t=5: {res.status} after {res.nodes} nodes, {res.elapsed:.2f}s")
print("  oracle agrees:", brute_force_t_cluster(ico, 5) is None)

##############################################################################
# Random agreement check on graphs up to nine vertices.

rng = np.random.default_rng(0)
disagree = 0
for _ in range(200):
    n = int(rng.integers(1, 10))
    g = Graph(range(n), [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
    for t in (3, 4, 5):
        disagree += (brute_force_t_cluster(g, t) is None) == find_t_cluster(g, t).found
print("disagreements on 200 random graphs:", disagree)
