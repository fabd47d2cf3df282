"""The triangle-path game on ``K6`` and the 6-cluster built from it.

Labels 0..5 name the vertices of ``K6``.  Given triangles ``C_1..C_k``,
``M(C_1..C_k)`` keeps the edges of ``K6`` that lie in no triangle; the game
asks for one path through each triangle (fixed by its middle vertex) such
that ``M`` plus the paths contains a copy of ``J``, the graph ``K6`` minus
the paths 0-1-2 and 3-4-5.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import GraphInputError, LemmaViolation, PreconditionError
from .graph import Bipartition, Graph
from .search import Cluster, validate_cluster

LABELS = range(6)
PAIRS = list(itertools.combinations(LABELS, 2))
_PAIR_BIT = {p: 1 << i for i, p in enumerate(PAIRS)}
ALL_TRIANGLES = [frozenset(c) for c in itertools.combinations(LABELS, 3)]

J_MISSING = ((0, 1), (1, 2), (3, 4), (4, 5))
J_EDGES = tuple(p for p in PAIRS if p not in J_MISSING)
J_DEGREE_THREE = (1, 4)


def _bit(u: int, v: int) -> int:
    return _PAIR_BIT[(u, v) if u < v else (v, u)]


def _mask(edges: Iterable[tuple[int, int]]) -> int:
    m = 0
    for u, v in edges:
        m |= _bit(u, v)
    return m


def j_template() -> Graph:
    return Graph(LABELS, J_EDGES)


# image of J's edge set under each of the 720 relabelings, with the relabeling
_J_IMAGES = [(perm, _mask((perm[u], perm[v]) for u, v in J_EDGES))
             for perm in itertools.permutations(LABELS)]


def _triangle(c: Iterable[int]) -> frozenset[int]:
    c = frozenset(c)
    if len(c) != 3 or not c <= set(LABELS):
        raise GraphInputError(f"{sorted(c)} is not a triangle on labels 0..5")
    return c


def _pair_mask(triangles: Sequence[frozenset[int]]) -> int:
    m = 0
    for c in triangles:
        m |= _mask(itertools.combinations(sorted(c), 2))
    return m


def build_M(triangles: Iterable[Iterable[int]]) -> Graph:
    tris = [_triangle(c) for c in triangles]
    covered = _pair_mask(tris)
    return Graph(LABELS, [p for p in PAIRS if not covered & _PAIR_BIT[p]])


def contains_J(g6: Graph) -> tuple[int, ...] | None:
    """A bijection ``emb`` (J-vertex ``i`` goes to ``emb[i]``) placing every
    edge of J on an edge of ``g6``, or None.  All 720 bijections are tried."""
    if tuple(g6.vertices) != tuple(LABELS):
        raise GraphInputError("contains_J needs a graph on exactly the vertices 0..5")
    have = _mask(g6.edges())
    for perm, image in _J_IMAGES:
        if image & ~have == 0:
            return perm
    return None


@lru_cache(maxsize=None)
def _embedding_for_mask(have: int) -> tuple[int, ...] | None:
    for perm, image in _J_IMAGES:
        if image & ~have == 0:
            return perm
    return None


@dataclass(frozen=True)
class PathChoice:
    triangle: frozenset[int]
    middle: int

    def __post_init__(self):
        if self.middle not in self.triangle:
            raise GraphInputError(f"middle {self.middle} is not in triangle {sorted(self.triangle)}")

    def edges(self) -> list[tuple[int, int]]:
        ends = sorted(self.triangle - {self.middle})
        return [(min(e, self.middle), max(e, self.middle)) for e in ends]


@dataclass(frozen=True)
class GameSolution:
    choices: tuple[PathChoice, ...]
    j_embedding: tuple[int, ...]
    tried: int = 1

    @property
    def middles(self) -> list[int]:
        return [c.middle for c in self.choices]

    def union_graph(self) -> Graph:
        return union_graph([c.triangle for c in self.choices], self.middles)

    def to_dict(self) -> dict:
        return {"middles": self.middles, "embedding": list(self.j_embedding)}


def union_graph(triangles: Iterable[Iterable[int]], middles: Sequence[int]) -> Graph:
    """``M(C_1..C_k)`` plus the path through each triangle with the given middle."""
    tris = [_triangle(c) for c in triangles]
    if len(middles) != len(tris):
        raise GraphInputError("need one middle vertex per triangle")
    paths = [PathChoice(c, m) for c, m in zip(tris, middles)]
    return build_M(tris).with_edges(e for pc in paths for e in pc.edges())


def solve_game(triangles: Iterable[Iterable[int]]) -> GameSolution:
    """First middle-vertex vector (lexicographic) whose union graph contains J."""
    tris = [_triangle(c) for c in triangles]
    base = (1 << len(PAIRS)) - 1 & ~_pair_mask(tris)
    options = [sorted(c) for c in tris]
    tried = 0
    for middles in itertools.product(*options):
        tried += 1
        have = base
        for c, mid in zip(tris, middles):
            for e in c - {mid}:
                have |= _bit(e, mid)
        emb = _embedding_for_mask(have)
        if emb is not None:
            choices = tuple(PathChoice(c, mid) for c, mid in zip(tris, middles))
            return GameSolution(choices, emb, tried)
    raise LemmaViolation(f"no path choice works for triangles {[sorted(c) for c in tris]}", tris)


@dataclass
class GameReport:
    k_max: int
    counts: dict[int, int]
    max_tried: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def passed(self) -> bool:
        return True  # failures raise LemmaViolation


def _solve_all(multisets) -> tuple[int, int]:
    worst = 0
    n = 0
    for ms in multisets:
        sol = solve_game([ALL_TRIANGLES[i] for i in ms])
        worst = max(worst, sol.tried)
        n += 1
    return n, worst


def verify_game_lemma(k_max: int, workers: int = 1) -> GameReport:
    """Solve the game for every multiset of at most ``k_max`` triangles of ``K6``.

    ``counts[k]`` is the number of size-``k`` multisets checked; any failure
    raises :class:`LemmaViolation`.
    """
    if not 0 <= k_max <= 4:
        raise PreconditionError("k_max must be between 0 and 4")
    counts = {}
    worst = 0
    for k in range(k_max + 1):
        multisets = list(itertools.combinations_with_replacement(range(len(ALL_TRIANGLES)), k))
        if workers > 1 and len(multisets) > 100:
            from concurrent.futures import ProcessPoolExecutor

            chunks = [multisets[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(workers) as pool:
                results = list(pool.map(_solve_all, chunks))
        else:
            results = [_solve_all(multisets)]
        counts[k] = sum(n for n, _ in results)
        worst = max([worst] + [w for _, w in results])
    return GameReport(k_max, counts, worst)


def j_five_cluster() -> Cluster:
    """5-cluster of J: the two degree-3 vertices together, the rest alone."""
    j = j_template()
    rest = [v for v in LABELS if v not in J_DEGREE_THREE]
    return Cluster([frozenset(J_DEGREE_THREE)] + [frozenset([v]) for v in rest], j)


def six_cluster_around(g: Graph, bip: Bipartition, a: int) -> Cluster | None:
    """6-cluster ``{a}, Y_1..Y_5`` around a degree-6 A-vertex, or None if not applicable.

    Helpers are A-vertices other than ``a`` with two or three neighbours in
    ``N(a)``; vertices with four or more are never used.  A greedy cover of
    the 15 pairs of ``N(a)`` by helpers (three-neighbour helpers preferred)
    is turned into a game instance, and the game's J-copy is lifted to
    branch sets.  Returns None when the helpers cannot cover every pair.
    """
    bip.check(g)
    if a not in bip.side_a:
        raise GraphInputError(f"vertex {a} is not on side A")
    if g.degree(a) != 6:
        raise PreconditionError(f"vertex {a} has degree {g.degree(a)}, need exactly 6")
    nbrs = sorted(g.neighbors(a))
    label = {b: i for i, b in enumerate(nbrs)}

    helpers = {}
    for c in sorted(bip.side_a - {a}):
        seen = frozenset(label[b] for b in g.neighbors(c) if b in label)
        if len(seen) in (2, 3):
            helpers[c] = seen
    pairs_of = {c: set(itertools.combinations(sorted(s), 2)) for c, s in helpers.items()}
    uncovered = set(PAIRS)
    chosen = []
    while uncovered:
        best = max(helpers, key=lambda c: (len(pairs_of[c] & uncovered), len(helpers[c]), -c), default=None)
        if best is None or not pairs_of[best] & uncovered:
            return None
        chosen.append(best)
        uncovered -= pairs_of[best]

    triple = [c for c in chosen if len(helpers[c]) == 3]
    double = [c for c in chosen if len(helpers[c]) == 2]
    sol = solve_game([helpers[c] for c in triple])
    anchor = {c: m for c, m in zip(triple, sol.middles)}
    anchor.update({c: min(helpers[c]) for c in double})

    owned = {v: {nbrs[v]} for v in LABELS}
    for c, v in anchor.items():
        owned[v].add(c)
    emb = sol.j_embedding
    ys = [frozenset().union(*(owned[emb[u]] for u in x)) for x in j_five_cluster().branch_sets]
    cluster = Cluster([frozenset([a])] + ys, g)
    verdict = validate_cluster(g, cluster, 6)
    if not verdict:  # pragma: no cover
        raise AssertionError(f"lifted 6-cluster is invalid: {verdict}")
    return cluster
