"""
Cover graphs, feasible partitions and K(p,q,r) patterns
=======================================================

Building blocks for arguments about bipartite graphs with large A-degrees:
which B-vertices can be joined through spare A-vertices, whether a set of
B-blocks can each be made connected with disjoint A-vertices, and where a
complete-bipartite-minus-matching pattern sits.
"""
from kminors import build_cover_graph, chromatic_number, feasible_partition, find_attachment_system, find_kpqr
from kminors.constructions import gen_complete_bipartite, gen_fig1
from kminors.graph import Graph
from kminors.reduction import set_partitions
from kminors.suites import k474_pattern

g, bip = gen_complete_bipartite(3, 3)
cover = build_cover_graph(g, bip, [0, 1], [3, 4, 5])
print("cover of K_{3,3} with a_list {0, 1}:", cover.edges, "witnesses", cover.witness)

g, bip, a, b = k474_pattern()
parts = list(set_partitions(b, 3))
ok = sum(feasible_partition(g, bip, a, b, p) is not None for p in parts)
print(f"K(4,7,4): {ok} of {len(parts)} partitions into <= 3 blocks are feasible")
p = [set(b[:4]), set(b[4:6]), {b[6]}]
print("  e.g.", [sorted(y) for y in p], "->", [sorted(x) for x in feasible_partition(g, bip, a, b, p)])

wheel = Graph.cycle(5).with_vertex(5, range(5))
print("chromatic numbers: K5", chromatic_number(Graph.complete(5)), "C5", chromatic_number(Graph.cycle(5)),
      "wheel", chromatic_number(wheel))

fig, fb = gen_fig1(3)
print("K(2,5,0) in the k=3 glued graph:", find_kpqr(fig, fb, 2, 5, 0))
print("K(3,4,3) in it:", find_kpqr(fig, fb, 3, 4, 3))

g, bip = gen_complete_bipartite(4, 5)
print("attachment system for the 4-side of K_{4,5}:", find_attachment_system(g, range(4), 5))
