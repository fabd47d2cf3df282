"""
The triangle-path game and 6-clusters around a degree-6 vertex
==============================================================

Label the six neighbours of a vertex a by 0..5.  Each helper with three
neighbours among them gives a triangle; for every triangle we may keep one
2-edge path.  Whatever the triangles, some choice of paths together with
the pairs no triangle touches contains J (K6 minus two disjoint 3-vertex
paths), and J has a K5 minor.  Adding {a} gives a K6 minor.
"""
import itertools

from kminors import contains_J, six_cluster_around, solve_game, validate_cluster, verify_game_lemma
from kminors.game import j_five_cluster, j_template, union_graph
from kminors.suites import CROSSING_MIDDLES, CROSSING_TRIANGLES, planted_six_instance

rep = verify_game_lemma(4)
print("multisets solved per size:", rep.counts, "worst number of choices tried:", rep.max_tried)

u = union_graph(CROSSING_TRIANGLES, CROSSING_MIDDLES)
print("four pairwise-overlapping triangles:", CROSSING_TRIANGLES)
print(f"  union graph has {u.num_edges} edges and contains J: {contains_J(u) is not None}")
missing = [p for p in itertools.combinations(range(6), 2) if not u.has_edge(*p)]
print("  missing pairs:", missing)

sol = solve_game([(0, 1, 2), (0, 1, 3)])
print("two triangles sharing an edge, middles:", sol.middles)

print("J's 5-cluster:", [sorted(x) for x in j_five_cluster()],
      bool(validate_cluster(j_template(), j_five_cluster(), 5)))

g, bip, a = planted_six_instance(3)
c = six_cluster_around(g, bip, a)
print(f"planted instance with {g.num_vertices} vertices, centre {a}:")
print("  6-cluster", [sorted(x) for x in c], "valid:", bool(validate_cluster(g, c, 6)))
