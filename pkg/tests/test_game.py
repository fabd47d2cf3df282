import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kminors.errors import GraphInputError, PreconditionError
from kminors.game import (
    ALL_TRIANGLES,
    J_DEGREE_THREE,
    J_EDGES,
    PathChoice,
    build_M,
    contains_J,
    j_five_cluster,
    j_template,
    six_cluster_around,
    solve_game,
    union_graph,
    verify_game_lemma,
)
from kminors.constructions import gen_complete_bipartite
from kminors.graph import Bipartition, Graph
from kminors.search import validate_cluster
from kminors.suites import CROSSING_MIDDLES, CROSSING_TRIANGLES, planted_six_instance


def test_build_M_examples():
    assert build_M([]).num_edges == 15
    assert build_M([(0, 1, 2)]).num_edges == 12
    m = build_M([(0, 1, 2), (0, 1, 3)])
    assert m.num_edges == 10
    assert not any(m.has_edge(*e) for e in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    with pytest.raises(GraphInputError):
        build_M([(0, 1)])
    with pytest.raises(GraphInputError):
        build_M([(0, 1, 6)])


def test_j_template():
    j = j_template()
    assert j.num_edges == 11
    assert sorted(v for v in j.vertices if j.degree(v) == 3) == list(J_DEGREE_THREE)
    assert j.has_edge(*J_DEGREE_THREE)
    complement = nx.complement(j.to_networkx())
    assert sorted(len(c) for c in nx.connected_components(complement)) == [3, 3]


def test_contains_J_examples():
    assert contains_J(Graph.complete(6)) is not None
    assert contains_J(j_template()) == (0, 1, 2, 3, 4, 5)
    # every copy of J misses two disjoint 3-vertex paths, which cannot hold a triangle
    assert contains_J(build_M([(0, 1, 2)])) is None
    assert contains_J(build_M([(0, 1, 2)]).with_edges([(0, 1)])) is not None
    with pytest.raises(GraphInputError):
        contains_J(Graph.complete(5))


@given(st.permutations(range(6)))
def test_contains_J_embedding_is_valid(perm):
    g = Graph(range(6), [(perm[u], perm[v]) for u, v in J_EDGES])
    emb = contains_J(g)
    assert emb is not None
    assert all(g.has_edge(emb[u], emb[v]) for u, v in J_EDGES)


def _contains_j_networkx(g):
    matcher = nx.algorithms.isomorphism.GraphMatcher(g.to_networkx(), j_template().to_networkx())
    return any(True for _ in matcher.subgraph_monomorphisms_iter())


@settings(max_examples=200)
@given(st.lists(st.booleans(), min_size=15, max_size=15))
def test_contains_J_matches_networkx(keep):
    pairs = list(itertools.combinations(range(6), 2))
    g = Graph(range(6), [p for p, k in zip(pairs, keep) if k])
    assert (contains_J(g) is not None) == _contains_j_networkx(g)


def test_path_choice():
    assert PathChoice(frozenset({0, 1, 2}), 1).edges() == [(0, 1), (1, 2)]
    with pytest.raises(GraphInputError):
        PathChoice(frozenset({0, 1, 2}), 3)


def test_solve_examples():
    sol = solve_game([])
    assert sol.choices == () and sol.to_dict()["middles"] == []
    sol = solve_game([(0, 1, 2), (0, 1, 3)])
    assert contains_J(sol.union_graph()) is not None


def test_explicit_configuration_gives_J():
    u = union_graph(CROSSING_TRIANGLES, CROSSING_MIDDLES)
    assert u.num_edges == 11
    assert nx.is_isomorphic(u.to_networkx(), j_template().to_networkx())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(ALL_TRIANGLES), max_size=4))
def test_solution_reverifies(tris):
    sol = solve_game(tris)
    g = sol.union_graph()
    emb = sol.j_embedding
    assert all(g.has_edge(emb[u], emb[v]) for u, v in J_EDGES)
    assert [c.triangle for c in sol.choices] == list(tris)
    assert g == union_graph(tris, sol.middles)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_M_edge_count_identity(k):
    # |E(M)| = 15 - |union of the triangles' pairs|, checked independently
    for ms in itertools.combinations_with_replacement(ALL_TRIANGLES, k):
        pairs = {p for c in ms for p in itertools.combinations(sorted(c), 2)}
        m = build_M(ms)
        assert m.num_edges == 15 - len(pairs)
        assert not any(m.has_edge(*p) for p in pairs)


def test_verify_counts():
    assert verify_game_lemma(1).counts == {0: 1, 1: 20}
    assert verify_game_lemma(2).counts[2] == 210
    rep = verify_game_lemma(4)
    assert rep.counts[4] == 8855 and rep.total == 1 + 20 + 210 + 1540 + 8855 and rep.passed
    with pytest.raises(PreconditionError):
        verify_game_lemma(5)


def test_verify_in_parallel_matches():
    assert verify_game_lemma(3, workers=2).counts == verify_game_lemma(3).counts


def test_j_five_cluster():
    c = j_five_cluster()
    assert c.branch_sets[0] == frozenset(J_DEGREE_THREE)
    assert sorted(len(x) for x in c) == [1, 1, 1, 1, 2]
    assert validate_cluster(j_template(), c, 5)


def test_six_cluster_not_applicable():
    g, bip = gen_complete_bipartite(6, 6)
    # every other A-vertex sees all six neighbours of 0, so none is a helper
    assert six_cluster_around(g, bip, 0) is None
    # a pair with no common neighbour besides a
    g = Graph(range(7), [(0, b) for b in range(1, 7)])
    assert six_cluster_around(g, Bipartition([0], range(1, 7)), 0) is None


def test_six_cluster_errors():
    g, bip = gen_complete_bipartite(5, 6)
    with pytest.raises(GraphInputError):
        six_cluster_around(g, bip, 7)
    g, bip = gen_complete_bipartite(2, 5)
    with pytest.raises(PreconditionError):
        six_cluster_around(g, bip, 0)


def test_six_cluster_explicit_configuration():
    # four triangle helpers pairwise sharing one vertex plus 2-helpers for the rest
    b = list(range(1, 7))
    edges = [(0, x) for x in b]
    helper = 7
    covered = set()
    for tri in CROSSING_TRIANGLES:
        edges += [(helper, b[i]) for i in tri]
        covered |= set(itertools.combinations(tri, 2))
        helper += 1
    for i, j in itertools.combinations(range(6), 2):
        if (i, j) not in covered:
            edges += [(helper, b[i]), (helper, b[j])]
            helper += 1
    g = Graph(range(helper), edges)
    bip = Bipartition([0] + list(range(7, helper)), b)
    # the four triangles cover 12 distinct pairs, leaving three for 2-helpers
    assert helper - 7 == 7
    c = six_cluster_around(g, bip, 0)
    assert c is not None and frozenset([0]) in c.branch_sets and validate_cluster(g, c, 6)


@pytest.mark.parametrize("seed", range(30))
def test_six_cluster_planted(seed):
    g, bip, a = planted_six_instance(seed)
    c = six_cluster_around(g, bip, a)
    assert c is not None and frozenset([a]) in c.branch_sets and validate_cluster(g, c, 6)
