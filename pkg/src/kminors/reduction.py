"""Cover graphs, feasible partitions and the other bipartite minor primitives.

Everything here works on a bipartite graph with a fixed bipartition
``(A, B)`` and is exhaustive on the small instances it is meant for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import GraphInputError, GuardExceeded, PreconditionError
from .graph import Bipartition, Graph

CHROMATIC_MAX_VERTICES = 10
ATTACHMENT_MAX_VERTICES = 16


@dataclass(frozen=True)
class CoverGraph:
    """Graph on chosen B-vertices; ``u, v`` adjacent when some A-vertex outside
    ``excluded`` sees both.  ``witness`` gives the lowest such vertex per edge."""

    base: tuple[int, ...]
    excluded: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    witness: dict

    def as_graph(self) -> Graph:
        return Graph(self.base, self.edges)


def build_cover_graph(g: Graph, bip: Bipartition, a_list: Sequence[int], b_list: Sequence[int]) -> CoverGraph:
    _check_lists(bip, a_list, b_list)
    pool = bip.side_a - set(a_list)
    edges = []
    witness = {}
    for u, v in itertools.combinations(sorted(b_list), 2):
        common = pool & g.neighbors(u) & g.neighbors(v)
        if common:
            edges.append((u, v))
            witness[(u, v)] = min(common)
    return CoverGraph(tuple(b_list), tuple(a_list), tuple(edges), witness)


def _check_lists(bip: Bipartition, a_list, b_list) -> None:
    if len(set(a_list)) != len(a_list) or len(set(b_list)) != len(b_list):
        raise GraphInputError("a_list and b_list must not repeat vertices")
    if not set(a_list) <= bip.side_a:
        raise GraphInputError(f"a_list has vertices outside A: {sorted(set(a_list) - bip.side_a)}")
    if not set(b_list) <= bip.side_b:
        raise GraphInputError(f"b_list has vertices outside B: {sorted(set(b_list) - bip.side_b)}")


def feasible_partition(g: Graph, bip: Bipartition, a_list: Sequence[int], b_list: Sequence[int],
                       part: Sequence[Iterable[int]]) -> list[frozenset[int]] | None:
    """Disjoint ``X_i`` from ``a_list`` with every ``G[X_i + Y_i]`` connected, or None.

    ``part`` is the list of blocks ``Y_i`` partitioning ``b_list``; the
    result is aligned with it (``X_i`` may be empty).  A matching of blocks
    to single A-vertices is tried first; if that fails, all
    ``(k + 1) ** p`` labelings of ``a_list`` are searched, so None is
    definitive.
    """
    bip.check(g)
    _check_lists(bip, a_list, b_list)
    blocks = [frozenset(y) for y in part]
    if any(not y for y in blocks):
        raise PreconditionError("blocks must be nonempty")
    if sum(len(y) for y in blocks) != len(b_list) or frozenset().union(*blocks) != set(b_list):
        raise PreconditionError("blocks must partition b_list")

    quick = _matching_assignment(g, a_list, blocks)
    if quick is not None:
        return quick

    k = len(blocks)
    a_sorted = sorted(a_list)
    labels = [0] * len(a_sorted)  # 0 = unused, i + 1 = block i

    def search(pos: int):
        if pos == len(a_sorted):
            xs = [frozenset(a for a, lab in zip(a_sorted, labels) if lab == i + 1) for i in range(k)]
            if all(g.is_connected(x | y) for x, y in zip(xs, blocks)):
                return xs
            return None
        a = a_sorted[pos]
        for lab in range(k + 1):
            # an A-vertex only helps a block it touches
            if lab and not (g.neighbors(a) & blocks[lab - 1]):
                continue
            labels[pos] = lab
            found = search(pos + 1)
            if found is not None:
                return found
        labels[pos] = 0
        return None

    return search(0)


def _matching_assignment(g, a_list, blocks):
    need = [i for i, y in enumerate(blocks) if not g.is_connected(y)]
    if not need:
        return [frozenset() for _ in blocks]
    h = nx.Graph()
    h.add_nodes_from(("y", i) for i in need)
    for i in need:
        for a in a_list:
            if g.is_connected(blocks[i] | {a}):
                h.add_edge(("y", i), ("a", a))
    match = nx.bipartite.hopcroft_karp_matching(h, top_nodes=[("y", i) for i in need])
    if any(("y", i) not in match for i in need):
        return None
    return [frozenset([match[("y", i)][1]]) if ("y", i) in match else frozenset()
            for i in range(len(blocks))]


def is_feasible_assignment(g: Graph, part: Sequence[Iterable[int]], xs: Sequence[Iterable[int]]) -> bool:
    xs = [frozenset(x) for x in xs]
    if len(xs) != len(part):
        return False
    if sum(len(x) for x in xs) != len(frozenset().union(*xs)):
        return False
    return all(g.is_connected(x | frozenset(y)) for x, y in zip(xs, part))


def set_partitions(items: Sequence[int], max_blocks: int | None = None) -> Iterator[list[frozenset[int]]]:
    """All partitions of ``items`` into at most ``max_blocks`` blocks (restricted growth order)."""
    items = list(items)
    n = len(items)
    cap = n if max_blocks is None else max_blocks
    rgs = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield [frozenset(items[j] for j in range(n) if rgs[j] == b) for b in range(used)]
            return
        for b in range(min(used + 1, cap)):
            rgs[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n == 0:
        yield []
        return
    yield from rec(0, 0)


def chromatic_number(h: Graph) -> int:
    """Exact chromatic number for graphs with at most 10 vertices."""
    n = h.num_vertices
    if n > CHROMATIC_MAX_VERTICES:
        raise GuardExceeded(f"chromatic_number is limited to {CHROMATIC_MAX_VERTICES} vertices, got {n}")
    if n == 0:
        return 0
    index = {v: i for i, v in enumerate(h.vertices)}
    nb = [0] * n
    for u, v in h.edges():
        nb[index[u]] |= 1 << index[v]
        nb[index[v]] |= 1 << index[u]
    full = (1 << n) - 1
    independent = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        independent[s] = independent[rest] and not (nb[low] & rest)
    # colours[s] = fewest independent sets covering s; fix the lowest vertex's class
    colours = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        best = n
        sub = rest
        while True:
            cls = sub | low
            if independent[cls]:
                best = min(best, colours[s ^ cls] + 1)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        colours[s] = best
    return colours[full]


@dataclass(frozen=True)
class KpqrEmbedding:
    """``a_i`` sees every ``b_j`` except the pairs ``(a_i, b_i)`` for ``i < r``."""

    p: int
    q: int
    r: int
    a_vertices: tuple[int, ...]
    b_vertices: tuple[int, ...]

    def is_valid(self, g: Graph, bip: Bipartition) -> bool:
        if len(self.a_vertices) != self.p or len(self.b_vertices) != self.q:
            return False
        if len(set(self.a_vertices)) != self.p or len(set(self.b_vertices)) != self.q:
            return False
        if not (set(self.a_vertices) <= bip.side_a and set(self.b_vertices) <= bip.side_b):
            return False
        for i, a in enumerate(self.a_vertices):
            for j, b in enumerate(self.b_vertices):
                if g.has_edge(a, b) == (i == j and i < self.r):
                    return False
        return True


def find_kpqr(g: Graph, bip: Bipartition, p: int, q: int, r: int) -> KpqrEmbedding | None:
    """Lexicographically least ``K(p,q,r)``-subgraph with A-side ``a_vertices``.

    Any embedding can be rearranged so that ``a_1 < ... < a_r``, the
    remaining a's are increasing and the unmatched b's are increasing; the
    search enumerates a-tuples in that normal form in lexicographic order
    and, for each, the least b-tuple is determined directly.
    """
    if min(p, q, r) < 0 or r > min(p, q):
        raise PreconditionError("need 0 <= r <= min(p, q)")
    bip.check(g)
    side_b = bip.side_b
    cand_a = sorted(a for a in bip.side_a if g.degree(a) >= q - 1 + (0 if r else 1))
    chosen: list[int] = []

    def b_tuple():
        b_match = []
        for i in range(r):
            others = [g.neighbors(a) for j, a in enumerate(chosen) if j != i]
            pool = side_b - g.neighbors(chosen[i])
            for nb in others:
                pool = pool & nb
            if not pool:
                return None
            b_match.append(min(pool))
        common = set(side_b)
        for a in chosen:
            common &= g.neighbors(a)
        rest = sorted(common)[: q - r]
        if len(rest) < q - r:
            return None
        return tuple(b_match) + tuple(rest)

    def search(pos: int, lo: int):
        if pos == p:
            bs = b_tuple()
            return None if bs is None else KpqrEmbedding(p, q, r, tuple(chosen), bs)
        for idx in range(lo, len(cand_a)):
            a = cand_a[idx]
            if a in chosen:
                continue
            matched = pos < r
            if not matched and g.degree(a) < q:
                continue
            chosen.append(a)
            if _common_ok(g, side_b, chosen, q, min(pos + 1, r)):
                nxt = 0 if pos + 1 == r else idx + 1
                found = search(pos + 1, nxt)
                if found is not None:
                    return found
            chosen.pop()
        return None

    return search(0, 0)


def _common_ok(g, side_b, chosen, q, matched) -> bool:
    # b's adjacent to all chosen a's: at least the q - matched unmatched ones
    common = set(side_b)
    for a in chosen:
        common &= g.neighbors(a)
    return len(common) >= q - matched


def find_attachment_system(g: Graph, x: Iterable[int], k: int) -> list[frozenset[int]] | None:
    """``k`` disjoint connected sets outside ``x``, each containing a neighbour
    of every vertex of ``x``; None if there are none (graphs up to 16 vertices).

    Each returned set is inclusion-minimal.
    """
    x = frozenset(x)
    if not x:
        raise PreconditionError("x must be nonempty")
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if not x <= set(g.vertices):
        raise GraphInputError(f"unknown vertices {sorted(x - set(g.vertices))}")
    if g.num_vertices > ATTACHMENT_MAX_VERTICES:
        raise GuardExceeded(f"attachment search is limited to {ATTACHMENT_MAX_VERTICES} vertices")
    rest = [v for v in g.vertices if v not in x]
    index = {v: i for i, v in enumerate(rest)}
    nb = [0] * len(rest)
    for v in rest:
        for w in g.neighbors(v):
            if w in index:
                nb[index[v]] |= 1 << index[w]
    # for each x-vertex, the mask of its neighbours outside x
    reach = [sum(1 << index[w] for w in g.neighbors(v) if w in index) for v in sorted(x)]

    from .search import _mask_connected

    good = []
    for s in range(1, 1 << len(rest)):
        if all(s & r for r in reach) and _mask_connected(s, nb):
            good.append(s)
    goodset = set(good)
    minimal = [s for s in good if not any((s & ~(1 << i)) in goodset for i in range(len(rest)) if s >> i & 1)]
    minimal.sort(key=lambda s: (s.bit_count(), s))

    def pack(start: int, used: int, picked: list[int]):
        if len(picked) == k:
            return picked
        for i in range(start, len(minimal)):
            s = minimal[i]
            if not s & used:
                found = pack(i + 1, used | s, picked + [s])
                if found is not None:
                    return found
        return None

    picked = pack(0, 0, [])
    if picked is None:
        return None
    return [frozenset(rest[i] for i in range(len(rest)) if s >> i & 1) for s in picked]
