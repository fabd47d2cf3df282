"""
Apex graphs over geodesic triangulations
========================================

Subdividing each face of the icosahedron into m^2 triangles gives a
triangulation with 10 m^2 + 2 vertices.  Adding a vertex adjacent to all
of them gives a graph with exactly 4n - 10 edges, minimum degree 6 and
(being planar plus one vertex) no K6 minor.
"""
import numpy as np

from kminors import find_t_cluster
from kminors.constructions import gen_apex_planar, gen_geodesic, geodesic_positions

for m in (1, 2, 3, 4):
    g = gen_geodesic(m)
    print(f"m={m}: n={g.num_vertices} edges={g.num_edges} (3n-6={3 * g.num_vertices - 6}) "
          f"degrees {g.degree_histogram()}")

pos = geodesic_positions(3)
g = gen_geodesic(3)
lengths = np.array([np.linalg.norm(pos[u] - pos[v]) for u, v in g.edges()])
print(f"m=3 edge chord lengths on the unit sphere: {lengths.min():.3f} .. {lengths.max():.3f}")

for m in (1, 2):
    a = gen_apex_planar(m)
    n = a.num_vertices
    print(f"apex over m={m}: n={n} edges={a.num_edges} 4n-10={4 * n - 10} min degree={a.min_degree()}")

res = find_t_cluster(gen_apex_planar(1), 6)
print(f"apex over the icosahedron, K6: {res.status} ({res.nodes} nodes, {res.elapsed:.2f}s)")
print(f"and K5 is there: {find_t_cluster(gen_apex_planar(1), 5).status}")
