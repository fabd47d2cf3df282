"""
Bipartite graphs with large A-degrees but no big clique minor
==============================================================

Glue k copies of K_{3,5} minus a 3-edge matching along their three
degree-2 vertices.  Every A-vertex has degree 4 and |A| >= |B|, yet there
is no K5 minor.  Adding one B-vertex joined to all of A raises every
A-degree to 5 without creating a K6 minor.
"""
from kminors import add_apex, find_t_cluster
from kminors.constructions import gen_fig1, gen_fig1_apex, gen_five_k35
from kminors.suites import check_apex_lemma

for k in (1, 3, 4):
    g, bip = gen_fig1(k)
    degs = {g.degree(a) for a in bip.side_a}
    res = find_t_cluster(g, 5)
    print(f"k={k}: |A|={len(bip.side_a)} |B|={len(bip.side_b)} A-degrees {degs}, "
          f"K5 {res.status} ({res.nodes} nodes, {res.elapsed:.2f}s)")

##############################################################################
# A vertex adjacent to everything adds exactly one to the largest clique
# minor.  Spot-check that on random small graphs with the oracle.

print("apex lemma holds on 100 random graphs:", check_apex_lemma(100, seed=0))

g, bip = gen_fig1(4)
ga, bipa = gen_fig1_apex(4)
big, _ = add_apex(g)
print("apex version sits inside fig1(4) + universal vertex:", set(ga.edges()) <= set(big.edges()))
print("so no K6 there either; direct search says:", find_t_cluster(ga, 6).status)

##############################################################################
# Without the bipartite structure, average degree above 4 is not enough for
# K5 either: five K_{3,5} tied to two extra vertices.

g = gen_five_k35()
print(f"five K_{{3,5}}: n={g.num_vertices}, average degree {2 * g.num_edges / g.num_vertices:.2f}, "
      f"max degree {g.max_degree()}, K5 {find_t_cluster(g, 5).status}")
