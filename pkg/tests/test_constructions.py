import networkx as nx
import numpy as np
import pytest

from kminors.constructions import (
    FamilySpec,
    gen_amplifier,
    gen_apex_planar,
    gen_complete_bipartite,
    gen_fig1,
    gen_fig1_apex,
    gen_five_k35,
    gen_geodesic,
    gen_random_bipartite_mindegA,
    geodesic_positions,
)
from kminors.errors import GraphInputError, PreconditionError
from kminors.graph import Bipartition, Graph


def test_complete_bipartite():
    g, bip = gen_complete_bipartite(3, 5)
    assert (g.num_vertices, g.num_edges) == (8, 15)
    g, _ = gen_complete_bipartite(4, 8)
    assert g.num_edges == 4 * 12 - 16
    g, _ = gen_complete_bipartite(1, 1)
    assert g.edges() == [(0, 1)]
    with pytest.raises(PreconditionError):
        gen_complete_bipartite(0, 3)


def test_fig1_sizes():
    g, bip = gen_fig1(3)
    assert len(bip.side_a) == 9 and len(bip.side_b) == 9
    assert all(g.degree(a) == 4 for a in bip.side_a)
    g, bip = gen_fig1(1)
    assert (g.num_vertices, g.num_edges) == (8, 12)
    g, bip = gen_fig1(4)
    assert (len(bip.side_a), len(bip.side_b)) == (12, 11)


def test_fig1_single_copy_is_k35_minus_matching():
    g, bip = gen_fig1(1)
    k35 = nx.complete_bipartite_graph(3, 5)
    k35.remove_edges_from([(0, 3), (1, 4), (2, 5)])
    assert nx.is_isomorphic(g.to_networkx(), k35)


def test_fig1_apex():
    g, bip = gen_fig1_apex(4)
    assert (len(bip.side_a), len(bip.side_b)) == (12, 12)
    assert all(g.degree(a) == 5 for a in bip.side_a)
    g, bip = gen_fig1_apex(1)
    assert g.num_vertices == 9 and all(g.degree(a) == 5 for a in bip.side_a)
    g, bip = gen_fig1_apex(2)
    assert (len(bip.side_a), len(bip.side_b)) == (6, 8)


def test_amplifier():
    g, bip = gen_fig1(2)
    h, hb = gen_amplifier(g, bip, min(bip.side_b), 1)
    assert h == g and hb == bip
    k11 = Graph([0, 1], [(0, 1)])
    h, hb = gen_amplifier(k11, Bipartition([0], [1]), 1, 2)
    assert nx.is_isomorphic(h.to_networkx(), nx.path_graph(3)) and len(hb.side_a) == 2
    h2, hb2 = gen_amplifier(g, bip, min(bip.side_b), 2)
    h3, hb3 = gen_amplifier(g, bip, min(bip.side_b), 2, add_apex=True)
    assert all(h3.degree(a) == h2.degree(a) + 1 for a in hb2.side_a)
    with pytest.raises(GraphInputError):
        gen_amplifier(g, bip, 0, 2)


def test_geodesic():
    g = gen_geodesic(1)
    assert (g.num_vertices, g.num_edges) == (12, 30) and g.degree_histogram() == {5: 12}
    assert nx.is_isomorphic(g.to_networkx(), nx.icosahedral_graph())
    g = gen_geodesic(2)
    assert (g.num_vertices, g.num_edges) == (42, 120)
    assert g.degree_histogram() == {5: 12, 6: 30}
    for m in (1, 2, 3, 4):
        g = gen_geodesic(m)
        assert g.num_edges == 3 * g.num_vertices - 6
        assert nx.check_planarity(g.to_networkx())[0]


def test_geodesic_positions_on_sphere():
    pos = geodesic_positions(3)
    assert pos.shape == (92, 3)
    assert np.allclose(np.linalg.norm(pos, axis=1), 1.0)
    # adjacent points are close, so edges are short chords
    g = gen_geodesic(3)
    lengths = [np.linalg.norm(pos[u] - pos[v]) for u, v in g.edges()]
    assert max(lengths) < 0.5


def test_apex_planar():
    g = gen_apex_planar(1)
    assert (g.num_vertices, g.num_edges) == (13, 42) and g.min_degree() == 6
    g = gen_apex_planar(2)
    assert (g.num_vertices, g.num_edges) == (43, 162) and g.min_degree() == 6


def test_five_k35():
    g = gen_five_k35()
    assert g.num_vertices == 42 and g.max_degree() == 5
    assert all(g.degree(8 * i + 3) == 5 for i in range(5))


def test_random_bipartite():
    g, bip = gen_random_bipartite_mindegA(6, 6, 6, 11)
    assert g.num_edges == 36
    g, bip = gen_random_bipartite_mindegA(8, 6, 6, 5)
    assert all(g.degree(a) == 6 for a in bip.side_a)
    assert gen_random_bipartite_mindegA(9, 7, 4, 3) == gen_random_bipartite_mindegA(9, 7, 4, 3)
    with pytest.raises(PreconditionError):
        gen_random_bipartite_mindegA(4, 3, 5, 0)


def test_family_spec():
    g, bip = FamilySpec("fig1", {"k": 3}).generate()
    assert g.num_vertices == 18
    g, bip = FamilySpec("geodesic", {"m": 2}).generate()
    assert g.num_vertices == 42 and bip is None
    g, bip = FamilySpec("five_k35").generate()
    assert bip is not None and bip.is_valid_for(g)
    g, bip = FamilySpec("amplifier", {"k": 2, "apex": 1}).generate()
    assert bip.is_valid_for(g)
    with pytest.raises(GraphInputError):
        FamilySpec("nope")
    with pytest.raises(GraphInputError):
        FamilySpec("fig1", {})
