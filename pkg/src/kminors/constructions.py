"""Generators for the example, counterexample and extremal graph families.

All generators are deterministic functions of their parameters (the random
family takes an explicit seed).  Bipartite families return the graph along
with its bipartition, A first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphInputError, PreconditionError
from .graph import Bipartition, Graph, bipartition_of

FAMILIES = (
    "complete_bipartite",
    "fig1",
    "fig1_apex",
    "amplifier",
    "apex_planar",
    "geodesic",
    "five_k35",
    "random_bipartite_mindegA",
)


def gen_complete_bipartite(m: int, n: int) -> tuple[Graph, Bipartition]:
    """``K_{m,n}``; A holds ids ``0..m-1``."""
    if m < 1 or n < 1:
        raise PreconditionError("both sides need at least one vertex")
    a = range(m)
    b = range(m, m + n)
    return Graph(range(m + n), itertools.product(a, b)), Bipartition(a, b)


def gen_fig1(k: int) -> tuple[Graph, Bipartition]:
    """``k`` copies of ``K_{3,5}`` minus a 3-edge matching, glued at their degree-2 vertices.

    Copy ``i`` owns A-vertices ``3i, 3i+1, 3i+2``; the three shared B-vertices
    are ``3k, 3k+1, 3k+2`` and copy ``i`` also owns B-vertices ``3k+3+2i`` and
    ``3k+4+2i``.  The removed matching pairs the j-th A-vertex of a copy with
    the j-th shared vertex.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    shared = [3 * k + j for j in range(3)]
    edges = []
    for i in range(k):
        xs = [3 * i + j for j in range(3)]
        own = [3 * k + 3 + 2 * i, 3 * k + 4 + 2 * i]
        for j, x in enumerate(xs):
            edges += [(x, y) for jj, y in enumerate(shared) if jj != j]
            edges += [(x, y) for y in own]
    n = 5 * k + 3
    a = range(3 * k)
    return Graph(range(n), edges), Bipartition(a, range(3 * k, n))


def gen_fig1_apex(k: int) -> tuple[Graph, Bipartition]:
    """:func:`gen_fig1` plus one B-vertex adjacent to all of A (id ``5k+3``)."""
    g, bip = gen_fig1(k)
    d = g.num_vertices
    return g.with_vertex(d, sorted(bip.side_a)), Bipartition(bip.side_a, bip.side_b | {d})


def gen_amplifier(g: Graph, bip: Bipartition, b: int, k: int, add_apex: bool = False) -> tuple[Graph, Bipartition]:
    """Glue ``k`` copies of ``g`` at the B-vertex ``b``.

    Copy 0 keeps the ids of ``g``; later copies get fresh ids in vertex
    order.  With ``add_apex`` a new B-vertex adjacent to every A-vertex of
    every copy is appended last.
    """
    bip.check(g)
    if b not in bip.side_b:
        raise GraphInputError(f"vertex {b} is not on side B")
    if k < 1:
        raise PreconditionError("k must be at least 1")
    nxt = max(g.vertices) + 1
    maps = [{v: v for v in g.vertices}]
    for _ in range(1, k):
        mp = {b: b}
        for v in g.vertices:
            if v != b:
                mp[v] = nxt
                nxt += 1
        maps.append(mp)
    verts = sorted({mp[v] for mp in maps for v in g.vertices})
    edges = {(mp[u], mp[v]) for mp in maps for u, v in g.edges()}
    side_a = {mp[v] for mp in maps for v in bip.side_a}
    side_b = {mp[v] for mp in maps for v in bip.side_b}
    if add_apex:
        edges |= {(a, nxt) for a in side_a}
        verts.append(nxt)
        side_b.add(nxt)
    return Graph(verts, edges), Bipartition(side_a, side_b)


def icosahedron_coordinates() -> np.ndarray:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            pts += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    return np.array(pts, dtype=float)


def _icosahedron_faces(coords: np.ndarray) -> list[tuple[int, int, int]]:
    dist = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=-1)
    near = np.isclose(dist, 2.0)
    return [f for f in itertools.combinations(range(12), 3)
            if near[f[0], f[1]] and near[f[0], f[2]] and near[f[1], f[2]]]


def _geodesic(m: int):
    if m < 1:
        raise PreconditionError("m must be at least 1")
    coords = icosahedron_coordinates()
    faces = _icosahedron_faces(coords)

    def key(face_no, p, q, r, i, j):
        # (i, j): steps towards q and r; p < q < r so edge keys agree between faces
        if i == 0 and j == 0:
            return ("v", p)
        if i == m and j == 0:
            return ("v", q)
        if i == 0 and j == m:
            return ("v", r)
        if j == 0:
            return ("e", p, q, i)
        if i == 0:
            return ("e", p, r, j)
        if i + j == m:
            return ("e", q, r, j)
        return ("f", face_no, i, j)

    points = {}
    tri_edges = set()
    for face_no, (p, q, r) in enumerate(faces):
        for i in range(m + 1):
            for j in range(m + 1 - i):
                k = key(face_no, p, q, r, i, j)
                w = (m - i - j) / m
                points.setdefault(k, w * coords[p] + i / m * coords[q] + j / m * coords[r])
        for i in range(m):
            for j in range(m - i):
                up = [key(face_no, p, q, r, *ij) for ij in ((i, j), (i + 1, j), (i, j + 1))]
                tris = [up]
                if i + j <= m - 2:
                    tris.append([key(face_no, p, q, r, *ij) for ij in ((i + 1, j), (i, j + 1), (i + 1, j + 1))])
                for tri in tris:
                    for u, v in itertools.combinations(tri, 2):
                        tri_edges.add(frozenset((u, v)))
    order = sorted(points, key=lambda k: ({"v": 0, "e": 1, "f": 2}[k[0]], k[1:]))
    ids = {k: i for i, k in enumerate(order)}
    g = Graph(range(len(order)), [tuple(ids[x] for x in e) for e in tri_edges])
    pos = np.array([points[k] for k in order])
    pos /= np.linalg.norm(pos, axis=1)[:, None]
    return g, pos


def gen_geodesic(m: int) -> Graph:
    """Triangulated icosahedron with each face cut into ``m**2`` triangles.

    ``10 m^2 + 2`` vertices; the twelve original corners keep degree 5 (ids
    0-11), every other vertex has degree 6.
    """
    return _geodesic(m)[0]


def geodesic_positions(m: int) -> np.ndarray:
    """Unit-sphere coordinates of the vertices of :func:`gen_geodesic`, by id."""
    return _geodesic(m)[1]


def gen_apex_planar(m: int) -> Graph:
    """Geodesic triangulation plus one vertex adjacent to everything (``4n - 10`` edges)."""
    g = gen_geodesic(m)
    return g.with_vertex(g.num_vertices, g.vertices)


def gen_five_k35() -> Graph:
    """Five disjoint ``K_{3,5}`` plus two vertices joined to one 5-side vertex of each.

    Copy ``i`` uses ids ``8i..8i+2`` (3-side) and ``8i+3..8i+7`` (5-side);
    the joined vertex of copy ``i`` is ``8i+3`` and the two extra vertices
    are 40 and 41.
    """
    edges = []
    for i in range(5):
        edges += [(8 * i + x, 8 * i + 3 + y) for x in range(3) for y in range(5)]
        edges += [(8 * i + 3, 40), (8 * i + 3, 41)]
    return Graph(range(42), edges)


def gen_random_bipartite_mindegA(n_a: int, n_b: int, d: int, seed: int) -> tuple[Graph, Bipartition]:
    """Each A-vertex gets ``d`` uniformly chosen B-neighbours, then every
    remaining A-B pair is added with probability 0.1.

    A is ``0..n_a-1`` and B is ``n_a..n_a+n_b-1``.
    """
    if n_a < 1 or n_b < 1:
        raise PreconditionError("both sides need at least one vertex")
    if not 0 <= d <= n_b:
        raise PreconditionError(f"need 0 <= d <= n_b, got d={d}, n_b={n_b}")
    rng = np.random.default_rng(seed)
    adj = np.zeros((n_a, n_b), dtype=bool)
    for a in range(n_a):
        adj[a, rng.choice(n_b, size=d, replace=False)] = True
    noise = rng.random((n_a, n_b)) < 0.1
    adj |= noise
    edges = [(int(a), int(n_a + b)) for a, b in zip(*np.nonzero(adj))]
    return Graph(range(n_a + n_b), edges), Bipartition(range(n_a), range(n_a, n_a + n_b))


@dataclass
class FamilySpec:
    """A family name plus integer parameters, as used by the ``gen`` command."""

    family: str
    params: dict[str, int] = field(default_factory=dict)

    _REQUIRED = {
        "complete_bipartite": ("m", "n"),
        "fig1": ("k",),
        "fig1_apex": ("k",),
        "amplifier": ("k",),
        "apex_planar": ("m",),
        "geodesic": ("m",),
        "five_k35": (),
        "random_bipartite_mindegA": ("nA", "nB", "d", "seed"),
    }

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphInputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        missing = [p for p in self._REQUIRED[self.family] if p not in self.params]
        if missing:
            raise GraphInputError(f"family {self.family} needs parameters {', '.join(missing)}")

    def generate(self, base: tuple[Graph, Bipartition] | None = None) -> tuple[Graph, Bipartition | None]:
        """Build the graph.  ``amplifier`` amplifies ``base`` (default ``fig1`` with k=1)."""
        p = self.params
        f = self.family
        if f == "complete_bipartite":
            return gen_complete_bipartite(p["m"], p["n"])
        if f == "fig1":
            return gen_fig1(p["k"])
        if f == "fig1_apex":
            return gen_fig1_apex(p["k"])
        if f == "amplifier":
            g, bip = base if base is not None else gen_fig1(1)
            b = p.get("b", min(bip.side_b))
            return gen_amplifier(g, bip, b, p["k"], bool(p.get("apex", 0)))
        if f == "apex_planar":
            return gen_apex_planar(p["m"]), None
        if f == "geodesic":
            return gen_geodesic(p["m"]), None
        if f == "five_k35":
            g = gen_five_k35()
            return g, bipartition_of(g)
        return gen_random_bipartite_mindegA(p["nA"], p["nB"], p["d"], p["seed"])
