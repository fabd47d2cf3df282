import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bipartite_graphs, graphs
from kminors.constructions import gen_complete_bipartite, gen_fig1
from kminors.errors import GraphInputError, GuardExceeded, PreconditionError
from kminors.graph import Bipartition, Graph
from kminors.reduction import (
    KpqrEmbedding,
    build_cover_graph,
    chromatic_number,
    feasible_partition,
    find_attachment_system,
    find_kpqr,
    is_feasible_assignment,
    set_partitions,
)
from kminors.suites import k474_pattern


def test_cover_examples():
    g, bip = gen_complete_bipartite(2, 3)
    cover = build_cover_graph(g, bip, [0, 1], [2, 3, 4])
    assert cover.edges == () and cover.base == (2, 3, 4)
    g, bip = gen_complete_bipartite(3, 3)
    cover = build_cover_graph(g, bip, [0, 1], [3, 4, 5])
    assert cover.edges == ((3, 4), (3, 5), (4, 5))
    assert set(cover.witness.values()) == {2}
    g, bip, a, b = k474_pattern()
    assert build_cover_graph(g, bip, a, b).edges == ()


def test_cover_side_errors():
    g, bip = gen_complete_bipartite(2, 3)
    with pytest.raises(GraphInputError):
        build_cover_graph(g, bip, [2], [3])
    with pytest.raises(GraphInputError):
        build_cover_graph(g, bip, [0], [0])
    with pytest.raises(GraphInputError):
        build_cover_graph(g, bip, [0, 0], [3])


@given(bipartite_graphs(), st.data())
def test_cover_witnesses_are_sound(gb, data):
    g, bip = gb
    a_list = data.draw(st.lists(st.sampled_from(sorted(bip.side_a)), unique=True))
    b_list = data.draw(st.lists(st.sampled_from(sorted(bip.side_b)), unique=True))
    cover = build_cover_graph(g, bip, a_list, b_list)
    pool = bip.side_a - set(a_list)
    for u, v in itertools.combinations(sorted(b_list), 2):
        shared = pool & g.neighbors(u) & g.neighbors(v)
        assert ((u, v) in cover.edges) == bool(shared)
        if shared:
            w = cover.witness[(u, v)]
            assert w == min(shared) and g.has_edge(w, u) and g.has_edge(w, v)


def test_feasible_examples():
    g, bip = gen_complete_bipartite(3, 3)
    assert feasible_partition(g, bip, [0, 1, 2], [3, 4, 5], [{3}, {4}, {5}]) == [frozenset()] * 3
    g, bip, a, b = k474_pattern()
    part = [set(b[:4]), set(b[4:6]), {b[6]}]
    xs = feasible_partition(g, bip, a, b, part)
    assert xs is not None and is_feasible_assignment(g, part, xs)
    # X_1 = {a1, a2} also works
    assert is_feasible_assignment(g, part, [{a[0], a[1]}, {a[2]}, set()])
    star, sb = gen_complete_bipartite(1, 2)
    assert feasible_partition(star, sb, [0], [1, 2], [{1, 2}]) == [frozenset([0])]


def test_feasible_rejects_bad_partitions():
    g, bip = gen_complete_bipartite(2, 3)
    with pytest.raises(PreconditionError):
        feasible_partition(g, bip, [0, 1], [2, 3, 4], [{2, 3}])
    with pytest.raises(PreconditionError):
        feasible_partition(g, bip, [0, 1], [2, 3, 4], [{2, 3, 4}, set()])


def test_infeasible_case():
    # two blocks each needing a connector, only one A-vertex available
    g, bip = gen_complete_bipartite(1, 4)
    assert feasible_partition(g, bip, [0], [1, 2, 3, 4], [{1, 2}, {3, 4}]) is None


def _feasible_by_enumeration(g, a_list, part):
    k = len(part)
    for labels in itertools.product(range(k + 1), repeat=len(a_list)):
        xs = [{a for a, lab in zip(a_list, labels) if lab == i + 1} for i in range(k)]
        if is_feasible_assignment(g, part, xs):
            return True
    return False


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs(max_a=6, max_b=5), st.data())
def test_feasible_matches_enumeration(gb, data):
    g, bip = gb
    a_list = sorted(bip.side_a)
    b_list = sorted(bip.side_b)
    parts = list(set_partitions(b_list))
    part = data.draw(st.sampled_from(parts))
    xs = feasible_partition(g, bip, a_list, b_list, part)
    assert (xs is not None) == _feasible_by_enumeration(g, a_list, part)
    if xs is not None:
        assert is_feasible_assignment(g, part, xs)


def test_set_partition_counts():
    # Bell numbers and Stirling sums
    assert [sum(1 for _ in set_partitions(range(n))) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert sum(1 for _ in set_partitions(range(7), 3)) == 1 + 63 + 301
    for part in set_partitions(range(5), 2):
        assert sorted(v for y in part for v in y) == list(range(5))


def test_chromatic_examples():
    assert chromatic_number(Graph.complete(5)) == 5
    assert chromatic_number(Graph.cycle(5)) == 3
    wheel = Graph.cycle(5).with_vertex(5, range(5))
    assert chromatic_number(wheel) == 4
    assert chromatic_number(Graph()) == 0
    assert chromatic_number(Graph(range(3))) == 1
    with pytest.raises(GuardExceeded):
        chromatic_number(Graph(range(11)))


def _colourable(g, k):
    return any(all(c[u] != c[v] for u, v in g.edges())
               for c in itertools.product(range(k), repeat=g.num_vertices))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_matches_brute_force(g):
    chi = chromatic_number(g)
    assert _colourable(g, chi)
    if chi > 0:
        assert not _colourable(g, chi - 1)


def test_kpqr_examples():
    g, bip = gen_complete_bipartite(3, 5)
    emb = find_kpqr(g, bip, 3, 5, 0)
    assert emb == KpqrEmbedding(3, 5, 0, (0, 1, 2), (3, 4, 5, 6, 7))
    h = Graph(g.vertices, [e for e in g.edges() if e not in {(0, 3), (1, 4), (2, 5)}])
    emb = find_kpqr(h, bip, 3, 5, 3)
    assert emb.is_valid(h, bip)
    assert {(a, b) for a, b in zip(emb.a_vertices, emb.b_vertices)} == {(0, 3), (1, 4), (2, 5)}
    fig, fb = gen_fig1(3)
    assert find_kpqr(fig, fb, 2, 5, 0) is None
    with pytest.raises(PreconditionError):
        find_kpqr(g, bip, 2, 2, 3)


def _kpqr_exists(g, bip, p, q, r):
    for a in itertools.permutations(sorted(bip.side_a), p):
        for b in itertools.permutations(sorted(bip.side_b), q):
            if KpqrEmbedding(p, q, r, a, b).is_valid(g, bip):
                return True
    return False


def test_kpqr_planted_recovery():
    rng = np.random.default_rng(5)
    for trial in range(500):
        p = int(rng.integers(1, 4))
        q = int(rng.integers(p, 5))
        r = int(rng.integers(0, p + 1))
        n_a, n_b = p + int(rng.integers(0, 3)), q + int(rng.integers(0, 3))
        a = rng.permutation(n_a)[:p]
        b = n_a + rng.permutation(n_b)[:q]
        edges = {(int(x), int(y)) for i, x in enumerate(a) for j, y in enumerate(b) if not (i == j and i < r)}
        for x in range(n_a):
            for y in range(n_a, n_a + n_b):
                if (x, y) not in edges and rng.random() < 0.3:
                    if not any(x == a[i] and y == b[i] for i in range(r)):
                        edges.add((x, y))
        g = Graph(range(n_a + n_b), edges)
        bip = Bipartition(range(n_a), range(n_a, n_a + n_b))
        emb = find_kpqr(g, bip, p, q, r)
        assert emb is not None and emb.is_valid(g, bip), trial


@settings(max_examples=100, deadline=None)
@given(bipartite_graphs(max_a=4, max_b=5), st.integers(1, 3), st.integers(1, 4), st.integers(0, 3))
def test_kpqr_matches_enumeration(gb, p, q, r):
    g, bip = gb
    if r > min(p, q):
        return
    emb = find_kpqr(g, bip, p, q, r)
    assert (emb is not None) == _kpqr_exists(g, bip, p, q, r)
    if emb is not None:
        assert emb.is_valid(g, bip)


def test_attachment_examples():
    g, bip = gen_complete_bipartite(4, 5)
    sets = find_attachment_system(g, range(4), 5)
    assert sorted(map(sorted, sets)) == [[4], [5], [6], [7], [8]]
    g, bip = gen_complete_bipartite(4, 4)
    assert find_attachment_system(g, range(4), 5) is None
    star, _ = gen_complete_bipartite(1, 6)
    assert len(find_attachment_system(star, [0], 5)) == 5
    with pytest.raises(PreconditionError):
        find_attachment_system(star, [], 1)
    with pytest.raises(GuardExceeded):
        find_attachment_system(Graph(range(17)), [0], 1)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=8), st.integers(1, 3), st.data())
def test_attachment_sets_are_valid(g, k, data):
    x = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1, max_size=2))
    sets = find_attachment_system(g, x, k)
    if sets is None:
        return
    assert len(sets) == k
    assert sum(map(len, sets)) == len(frozenset().union(*sets))
    for s in sets:
        assert not s & x and g.is_connected(s)
        assert all(g.neighbors(v) & s for v in x)
