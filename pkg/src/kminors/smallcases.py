"""Constructive ``K_t`` minors (``t <= 4``) in bipartite graphs with ``|A| >= |B|``.

If every A-vertex has degree at least ``t - 1`` such a minor always exists.
The finder follows the inductive argument: normalise to ``|A| = |B|`` with
A-degrees exactly ``t - 1``, then peel off a low-degree B-vertex, contract,
recurse, and lift the certificate back through each contraction.
"""

from __future__ import annotations

from .errors import PreconditionError
from .graph import Bipartition, Graph, contract_into_side, delete_vertices
from .search import Cluster, find_cycle, find_t_cluster, validate_cluster


def find_small_minor_bipartite(g: Graph, bip: Bipartition, t: int) -> Cluster:
    """Return a validated ``t``-cluster of ``g`` for ``t`` in 1..4.

    Requires ``|A| >= |B| > 0`` and every A-vertex of degree at least ``t - 1``.
    """
    if t not in (1, 2, 3, 4):
        raise PreconditionError(f"t must be between 1 and 4, got {t}")
    bip.check(g)
    if not len(bip.side_a) >= len(bip.side_b) > 0:
        raise PreconditionError("need |A| >= |B| > 0")
    low = sorted(a for a in bip.side_a if g.degree(a) < t - 1)
    if low:
        raise PreconditionError(f"A-vertices {low} have degree below {t - 1}")

    if t == 1:
        sets = [frozenset([min(g.vertices)])]
    elif t == 2:
        a = min(a for a in bip.side_a if g.degree(a))
        sets = [frozenset([a]), frozenset([min(g.neighbors(a))])]
    elif t == 3:
        h, _ = _normalise(g, bip, 2)
        cycle = find_cycle(h)  # 2|A| edges on 2|A| vertices
        sets = [frozenset(cycle[:1]), frozenset(cycle[1:2]), frozenset(cycle[2:])]
    else:
        sets = _four(g, bip)
    verdict = validate_cluster(g, sets, t)
    if not verdict:  # pragma: no cover
        raise AssertionError(f"constructed cluster is invalid: {verdict}")
    return Cluster(sets, g)


def _normalise(g: Graph, bip: Bipartition, d: int) -> tuple[Graph, Bipartition]:
    """Trim every A-vertex to its ``d`` lowest neighbours and drop surplus A-vertices."""
    keep_a = sorted(bip.side_a)[: len(bip.side_b)]
    drop = set(bip.side_a) - set(keep_a)
    edges = [(a, b) for a in keep_a for b in sorted(g.neighbors(a))[:d]]
    verts = [v for v in g.vertices if v not in drop]
    return Graph(verts, edges), Bipartition(keep_a, bip.side_b)


def _four(g: Graph, bip: Bipartition) -> list[frozenset[int]]:
    g, bip = _normalise(g, bip, 3)
    low = [b for b in sorted(bip.side_b) if g.degree(b) <= 2]
    if not low:
        # minimum degree three forces a K4 minor; any exact search finds it
        res = find_t_cluster(g, 4)
        assert res.found
        return list(res.cluster.branch_sets)
    b = low[0]
    nb = sorted(g.neighbors(b))
    if len(nb) == 0:
        return _four(delete_vertices(g, [b]), Bipartition(bip.side_a, bip.side_b - {b}))
    if len(nb) == 1:
        a = nb[0]
        return _four(delete_vertices(g, [a, b]), Bipartition(bip.side_a - {a}, bip.side_b - {b}))
    a1, a2 = nb
    others = (g.neighbors(a1) | g.neighbors(a2)) - {b}
    if len(others) >= 3:
        return _contract_and_recurse(g, bip, {a1, b, a2}, "A")
    # a1 and a2 have the same three neighbours b, b1, b2
    b1, b2 = sorted(others)
    common = (g.neighbors(b1) & g.neighbors(b2)) - {a1, a2}
    if common:
        c = min(common)
        return [frozenset([a1]), frozenset([b1, c]), frozenset([b2]), frozenset([a2, b])]
    return _contract_and_recurse(g, bip, {b1, b2, a1, a2, b}, "B")


def _contract_and_recurse(g, bip, x, side):
    h, hbip = contract_into_side(g, bip, x, side)
    new = next(iter(set(h.vertices) - set(g.vertices)))
    sets = _four(h, hbip)
    return [(s - {new}) | frozenset(x) if new in s else s for s in sets]
