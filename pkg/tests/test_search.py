import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, k_minus
from kminors.constructions import gen_complete_bipartite, gen_fig1, gen_geodesic
from kminors.errors import GuardExceeded, PreconditionError, StructuralError
from kminors.graph import Graph
from kminors.search import (
    Cluster,
    SearchBudget,
    add_apex,
    brute_force_t_cluster,
    drop_apex,
    find_cycle,
    find_t_cluster,
    minimize_cluster,
    reduce_for_minor,
    validate_cluster,
)

K33 = gen_complete_bipartite(3, 3)[0]  # x_i = i, y_i = 3 + i


def test_validate_examples():
    assert validate_cluster(Graph.complete(6), [{v} for v in range(6)], 6)
    assert validate_cluster(K33, [{0, 3}, {1, 4}, {2}, {5}], 4)
    v = validate_cluster(Graph.path(6), [{v} for v in range(6)], 6)
    assert not v and v.reason == "missing-edge" and v.where == (0, 2)


def test_validate_reasons():
    k4 = Graph.complete(4)
    assert validate_cluster(k4, [{0}, {1}], 3).reason == "count"
    assert validate_cluster(k4, [{0}, set(), {1}], 3).reason == "empty"
    assert validate_cluster(k4, [{0, 1}, {1}, {2}], 3).reason == "overlap"
    assert validate_cluster(Graph.path(4), [{0, 2}, {1}, {3}], 3).reason == "disconnected"
    with pytest.raises(StructuralError):
        validate_cluster(k4, [{0}, {9}], 2)


def test_oracle_examples():
    c = brute_force_t_cluster(Graph.complete(5), 5)
    assert sorted(map(sorted, c)) == [[0], [1], [2], [3], [4]]
    assert brute_force_t_cluster(K33, 5) is None
    assert brute_force_t_cluster(gen_geodesic(1), 5) is None
    with pytest.raises(GuardExceeded):
        brute_force_t_cluster(Graph(range(13)), 2)


def test_search_examples():
    assert find_t_cluster(k_minus(6, {(0, 1)}), 6).absent
    k35 = gen_complete_bipartite(3, 5)[0]
    assert find_t_cluster(k35, 5).absent and brute_force_t_cluster(k35, 5) is None
    assert find_t_cluster(gen_fig1(3)[0], 5).absent
    res = find_t_cluster(Graph.complete(6), 6)
    assert res.found and sorted(map(len, res.cluster)) == [1] * 6


def test_search_small_t():
    assert find_t_cluster(Graph(), 1).absent
    assert find_t_cluster(Graph([3]), 1).found
    assert find_t_cluster(Graph(range(3)), 2).absent
    assert find_t_cluster(Graph.path(5), 3).absent
    assert find_t_cluster(Graph.cycle(5), 3).found
    with pytest.raises(PreconditionError):
        find_t_cluster(Graph.complete(3), 0)


def test_icosahedron_is_k5_free():
    assert find_t_cluster(gen_geodesic(1), 5).absent
    assert find_t_cluster(gen_geodesic(1), 4).found


def test_budget():
    with pytest.raises(ValueError):
        SearchBudget(node_limit=0)
    with pytest.raises(ValueError):
        SearchBudget(time_limit=-1.0)
    res = find_t_cluster(gen_fig1(3)[0], 5, SearchBudget(node_limit=1))
    assert res.status == "timeout" and res.cluster is None


def test_reduce_examples():
    g = Graph.complete(6).with_vertex(6, [5]).with_vertex(7, [6]).with_vertex(8, [7])
    assert reduce_for_minor(g, 6) == Graph.complete(6)
    core = reduce_for_minor(Graph.cycle(10), 4)
    assert core.num_vertices <= 3 and find_t_cluster(core, 4).absent
    fig = gen_fig1(3)[0]
    assert fig.min_degree() >= 3 and reduce_for_minor(fig, 5) == fig
    with pytest.raises(PreconditionError):
        reduce_for_minor(fig, 3)


def test_find_cycle():
    assert find_cycle(Graph.path(4)) is None
    cyc = find_cycle(Graph.cycle(5).with_vertex(5, [0]))
    assert sorted(cyc) == [0, 1, 2, 3, 4]


def test_minimize_cluster_drops_extra_vertices():
    g = Graph.complete(4).with_vertex(4, [0])
    sets = minimize_cluster(g, [{0, 4}, {1}, {2}, {3}])
    assert sets[0] == {0}


def test_apex_helpers():
    g, v = add_apex(Graph.complete(4))
    assert v == 4 and g == Graph.complete(5)
    c = brute_force_t_cluster(g, 5)
    d = drop_apex(c, v)
    assert validate_cluster(Graph.complete(4), d, 4)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.integers(1, 6))
def test_search_agrees_with_oracle(g, t):
    a = brute_force_t_cluster(g, t)
    b = find_t_cluster(g, t)
    assert (a is not None) == b.found
    if a is not None:
        assert validate_cluster(g, a, t)
        assert validate_cluster(g, b.cluster, t)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.data())
def test_adding_edge_is_monotone(g, data):
    missing = [e for e in itertools.combinations(g.vertices, 2) if not g.has_edge(*e)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    for t in (4, 5):
        if find_t_cluster(g, t).found:
            assert find_t_cluster(g.with_edges([e]), t).found


def test_reduce_preserves_verdict():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(4, 11))
        p = float(rng.uniform(0.2, 0.7))
        g = Graph(range(n), [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        t = int(rng.integers(4, 6))
        h = reduce_for_minor(g, t)
        assert find_t_cluster(g, t).found == find_t_cluster(h, t).found
        assert (brute_force_t_cluster(h, t) is None) == (not find_t_cluster(g, t).found)


def test_planar_graphs_have_no_k5():
    rng = np.random.default_rng(3)
    for seed in range(20):
        # random tree plus random edges that keep it planar
        h = Graph.from_networkx(nx.random_labeled_tree(10, seed=seed))
        for _ in range(15):
            u, v = map(int, rng.choice(10, 2, replace=False))
            trial = h.with_edges([(u, v)])
            if nx.check_planarity(trial.to_networkx())[0]:
                h = trial
        assert find_t_cluster(h, 5).absent
