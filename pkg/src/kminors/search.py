"""Complete-graph minor search with certificates.

A ``K_t`` minor is certified by a *t-cluster*: ``t`` disjoint vertex sets,
each inducing a connected subgraph, with an edge between every two of them.

:func:`find_t_cluster` is exact.  It combines

* safe reductions (low degree vertices, low degree simplicial vertices,
  universal vertices, components),
* a refutation through small separators: for ``|S| < t`` every ``K_t``
  model of ``G`` restricts to one of the pieces ``G[C + S]`` with ``S`` made
  a clique, so "no piece has one" proves absence,
* a branch-and-bound over connected partitions (see :func:`_Search`),
  where each part is a growing branch set that either absorbs a neighbour
  or is closed off.

:func:`brute_force_t_cluster` is an independent oracle for tiny graphs.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import GuardExceeded, PreconditionError, StructuralError
from .graph import Graph, components, delete_vertices, induced_subgraph

BRUTE_FORCE_MAX_VERTICES = 12


@dataclass(frozen=True)
class Cluster:
    """Branch sets of a complete-graph minor, optionally tied to its graph."""

    branch_sets: tuple[frozenset[int], ...]
    graph: Graph | None = field(default=None, compare=False, repr=False)

    def __init__(self, branch_sets: Iterable[Iterable[int]], graph: Graph | None = None):
        object.__setattr__(self, "branch_sets", tuple(frozenset(x) for x in branch_sets))
        object.__setattr__(self, "graph", graph)

    @property
    def t(self) -> int:
        return len(self.branch_sets)

    def __len__(self) -> int:
        return len(self.branch_sets)

    def __iter__(self):
        return iter(self.branch_sets)

    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.branch_sets)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`validate_cluster`; truthy iff the cluster is valid."""

    ok: bool
    reason: str = ""
    where: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_cluster(g: Graph, c: Cluster | Sequence[Iterable[int]], t: int) -> Verdict:
    """Check that ``c`` is a ``t``-cluster of ``g``.

    On rejection the verdict names the first failed condition, in the order
    count, empty set, overlap, disconnected set, missing edge, together with
    the offending index or pair of indices.
    """
    sets = [frozenset(x) for x in (c.branch_sets if isinstance(c, Cluster) else c)]
    for i, x in enumerate(sets):
        bad = [v for v in x if v not in g]
        if bad:
            raise StructuralError(f"branch set {i} uses unknown vertices {sorted(bad)}")
    if len(sets) != t:
        return Verdict(False, "count", (len(sets), t))
    for i, x in enumerate(sets):
        if not x:
            return Verdict(False, "empty", (i,))
    for i, j in itertools.combinations(range(t), 2):
        if sets[i] & sets[j]:
            return Verdict(False, "overlap", (i, j))
    for i, x in enumerate(sets):
        if not g.is_connected(x):
            return Verdict(False, "disconnected", (i,))
    for i, j in itertools.combinations(range(t), 2):
        if not any(g.neighbors(v) & sets[j] for v in sets[i]):
            return Verdict(False, "missing-edge", (i, j))
    return Verdict(True)


def minimize_cluster(g: Graph, sets: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    """Greedily drop vertices from branch sets while the cluster stays valid."""
    sets = [set(x) for x in sets]
    t = len(sets)

    def still_ok(i: int, x: set[int]) -> bool:
        if not g.is_connected(x):
            return False
        touch = set().union(*(g.neighbors(v) for v in x))
        return all(touch & sets[j] for j in range(t) if j != i)

    changed = True
    while changed:
        changed = False
        for i in range(t):
            for v in sorted(sets[i], reverse=True):
                if len(sets[i]) > 1:
                    trial = sets[i] - {v}
                    if still_ok(i, trial):
                        sets[i] = trial
                        changed = True
    return [frozenset(x) for x in sets]


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search; ``None`` means unlimited."""

    node_limit: int | None = None
    time_limit: float | None = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise PreconditionError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise PreconditionError("time_limit must be positive")


Status = Literal["found", "absent", "timeout"]


@dataclass
class SearchResult:
    status: Status
    cluster: Cluster | None = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def absent(self) -> bool:
        return self.status == "absent"


class _Timeout(Exception):
    pass


class _Tracker:
    def __init__(self, budget: SearchBudget | None):
        budget = budget or SearchBudget()
        self.node_limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Timeout
        if self.deadline is not None and self.nodes % 128 == 0 and time.monotonic() > self.deadline:
            raise _Timeout


def find_t_cluster(g: Graph, t: int, budget: SearchBudget | None = None) -> SearchResult:
    """Decide whether ``g`` has a ``K_t`` minor.

    Returns a :class:`SearchResult` whose status is ``"found"`` (with a
    validated, minimized cluster), ``"absent"`` (search exhausted) or
    ``"timeout"`` (budget ran out first).
    """
    if t < 1:
        raise PreconditionError("t must be at least 1")
    tracker = _Tracker(budget)
    start = time.monotonic()
    try:
        sets = _find(g, t, tracker)
    except _Timeout:
        return SearchResult("timeout", None, tracker.nodes, time.monotonic() - start)
    if sets is None:
        return SearchResult("absent", None, tracker.nodes, time.monotonic() - start)
    sets = sorted(minimize_cluster(g, sets), key=min)
    verdict = validate_cluster(g, sets, t)
    if not verdict:  # pragma: no cover - would be a bug in the search
        raise AssertionError(f"search produced an invalid cluster: {verdict}")
    return SearchResult("found", Cluster(sets, g), tracker.nodes, time.monotonic() - start)


def has_minor(g: Graph, t: int) -> bool:
    res = find_t_cluster(g, t)
    return res.found


# -- oracle -----------------------------------------------------------------


def brute_force_t_cluster(g: Graph, t: int) -> Cluster | None:
    """Exhaustive ``t``-cluster search for graphs with at most 12 vertices.

    Enumerates every connected vertex subset, then every ``t`` of them in
    increasing subset order that are pairwise disjoint and adjacent.  The
    first such choice is returned.
    """
    n = g.num_vertices
    if n > BRUTE_FORCE_MAX_VERTICES:
        raise GuardExceeded(f"brute force is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {n}")
    if t < 1:
        raise PreconditionError("t must be at least 1")
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    nb = [0] * n
    for u, v in g.edges():
        nb[index[u]] |= 1 << index[v]
        nb[index[v]] |= 1 << index[u]

    masks = []
    touch = []
    for s in range(1, 1 << n):
        if _mask_connected(s, nb):
            masks.append(s)
            t_mask = 0
            for i in _bits(s):
                t_mask |= nb[i]
            touch.append(t_mask & ~s)
    if not masks:
        return None
    m = np.array(masks, dtype=np.int16)
    tc = np.array(touch, dtype=np.int16)
    compatible = ((m[:, None] & m[None, :]) == 0) & ((tc[:, None] & m[None, :]) != 0)
    rows = [_row_bits(compatible[i]) for i in range(len(masks))]

    def extend(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == t:
            return chosen
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            cand ^= low
            if (cand & rows[j]).bit_count() < t - len(chosen) - 1:
                continue
            found = extend(chosen + [j], cand & rows[j])
            if found is not None:
                return found
        return None

    picked = extend([], (1 << len(masks)) - 1)
    if picked is None:
        return None
    sets = [frozenset(verts[i] for i in _bits(masks[j])) for j in picked]
    return Cluster(sets, g)


def _row_bits(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_connected(s: int, nb: Sequence[int]) -> bool:
    seen = s & -s
    frontier = seen
    while frontier:
        grow = 0
        for i in _bits(frontier):
            grow |= nb[i]
        frontier = grow & s & ~seen
        seen |= frontier
    return seen == s


# -- reductions ---------------------------------------------------------------


def reduce_for_minor(g: Graph, t: int) -> Graph:
    """Shrink ``g`` without changing whether it has a ``K_t`` minor (``t >= 4``).

    Isolated vertices are deleted and every vertex of degree one or two is
    contracted into its lowest-id neighbour, until none is left.  A single
    vertex branch set needs degree at least ``t - 1 >= 3``, which is why
    this is safe.
    """
    if t < 4:
        raise PreconditionError("reduce_for_minor needs t >= 4")
    h, _ = _reduce_low_degree(g)
    return h


def _reduce_low_degree(g: Graph, simplicial_below: int | None = None):
    """Return ``(graph, members)``; ``members[v]`` lists the original vertices behind ``v``.

    With ``simplicial_below`` set, simplicial vertices of degree below it are
    also deleted.
    """
    adj = {v: set(nb) for v, nb in g.adjacency().items()}
    members = {v: {v} for v in adj}
    queue = sorted(adj)
    while queue:
        nxt = set()
        for v in queue:
            if v not in adj:
                continue
            nbrs = adj[v]
            d = len(nbrs)
            if d == 0:
                del adj[v]
                del members[v]
            elif d <= 2:
                u = min(nbrs)
                for w in nbrs:
                    adj[w].discard(v)
                for w in nbrs - {u}:
                    adj[w].add(u)
                    adj[u].add(w)
                members[u] |= members.pop(v)
                del adj[v]
                nxt |= nbrs
            elif simplicial_below is not None and d < simplicial_below and _is_clique(adj, nbrs):
                for w in nbrs:
                    adj[w].discard(v)
                del adj[v]
                del members[v]
                nxt |= nbrs
        queue = sorted(w for w in nxt if w in adj)
    h = Graph._from_adj({v: frozenset(nb) for v, nb in adj.items()})
    return h, {v: frozenset(m) for v, m in members.items()}


def _is_clique(adj, verts) -> bool:
    verts = list(verts)
    return all(verts[j] in adj[verts[i]] for i in range(len(verts)) for j in range(i + 1, len(verts)))


def add_apex(g: Graph) -> tuple[Graph, int]:
    """Add a vertex adjacent to every vertex of ``g``; returns the graph and its id."""
    v = max(g.vertices, default=-1) + 1
    return g.with_vertex(v, g.vertices), v


def drop_apex(c: Cluster, apex: int) -> Cluster:
    """Turn a ``t``-cluster of ``g + apex`` into a ``(t-1)``-cluster of ``g``.

    The branch set holding the apex is discarded (or any one set, if the
    apex is unused); the remaining sets never relied on it.
    """
    sets = list(c.branch_sets)
    holding = [i for i, x in enumerate(sets) if apex in x]
    del sets[holding[0] if holding else len(sets) - 1]
    return Cluster(sets)


# -- exact search ---------------------------------------------------------------


def _mader_dense(n: int, m: int, t: int) -> bool:
    # more edges than any K_t-minor-free graph on n vertices can have (t <= 7)
    return 4 <= t <= 7 and n >= t - 1 and m > (t - 2) * n - comb(t - 1, 2)


def _find(g: Graph, t: int, tr: _Tracker) -> list[frozenset[int]] | None:
    tr.tick()
    if t <= 3:
        return _find_small(g, t)
    n, m = g.num_vertices, g.num_edges
    if n < t or m < comb(t, 2):
        return None

    h, members = _reduce_low_degree(g, simplicial_below=t - 1)
    if h.num_vertices < n:
        sets = _find(h, t, tr)
        if sets is None:
            return None
        return [frozenset().union(*(members[v] for v in x)) for x in sets]

    for v in g.vertices:
        nb = g.neighbors(v)
        if len(nb) == n - 1:
            sets = _find(delete_vertices(g, [v]), t - 1, tr)
            return None if sets is None else sets + [frozenset([v])]
        if len(nb) >= t - 1 and _is_clique(g.adjacency(), nb):
            return [frozenset([v])] + [frozenset([u]) for u in sorted(nb)[: t - 1]]

    comps = components(g)
    if len(comps) > 1:
        for comp in comps:
            if len(comp) >= t:
                sets = _find(induced_subgraph(g, comp), t, tr)
                if sets is not None:
                    return sets
        return None

    search = _Search(g, t, tr)
    sets = search.greedy()
    if sets is not None:
        return sets

    if not _mader_dense(n, m, t):
        sep = _best_separator(g, t)
        if sep is not None:
            sets = _refute_by_separator(g, t, sep, tr)
            if sets is not False:
                return sets
    return search.run()


def _find_small(g: Graph, t: int) -> list[frozenset[int]] | None:
    if t <= 0:
        return []
    if t == 1:
        return [frozenset([g.vertices[0]])] if g.num_vertices else None
    if t == 2:
        edges = g.edges()
        return [frozenset([edges[0][0]]), frozenset([edges[0][1]])] if edges else None
    cycle = find_cycle(g)
    if cycle is None:
        return None
    return [frozenset([cycle[0]]), frozenset([cycle[1]]), frozenset(cycle[2:])]


def find_cycle(g: Graph) -> list[int] | None:
    """Vertices of some cycle in order, or None for a forest."""
    parent = {v: v for v in g.vertices}

    def root(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    forest: dict[int, set[int]] = {v: set() for v in g.vertices}
    for u, v in g.edges():
        ru, rv = root(u), root(v)
        if ru != rv:
            parent[ru] = rv
            forest[u].add(v)
            forest[v].add(u)
            continue
        # u and v already joined by a forest path: that path plus uv is a cycle
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for y in forest[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        path = [v]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return path
    return None


def _best_separator(g: Graph, t: int) -> tuple[frozenset[int], list[frozenset[int]]] | None:
    """Smallest separator of size below ``t`` (at most 4), most balanced among those."""
    n = g.num_vertices
    best = None
    best_score = n
    for s in range(1, min(t - 1, 4, n - 2) + 1):
        for sep in itertools.combinations(g.vertices, s):
            comps = components(delete_vertices(g, sep))
            if len(comps) < 2:
                continue
            score = max(len(c) for c in comps) + s
            if score < best_score:
                best, best_score = (frozenset(sep), comps), score
        if best is not None:
            return best
    return None


def _refute_by_separator(g, t, sep, tr):
    """Search each piece; returns sets, None (absent) or False (inconclusive)."""
    s, comps = sep
    inconclusive = False
    for comp in comps:
        piece = induced_subgraph(g, comp | s).with_edges(itertools.combinations(sorted(s), 2))
        sets = _find(piece, t, tr)
        if sets is None:
            continue
        if validate_cluster(g, sets, t):
            return sets
        inconclusive = True
    return False if inconclusive else None


class _Search:
    """Branch-and-bound over connected partitions of a connected graph.

    In a connected graph any ``K_t`` model can be grown until it covers every
    vertex, so it suffices to look for a partition into exactly ``t``
    connected parts that are pairwise adjacent.  The state is the quotient
    graph of the parts built so far, plus "separate" marks on quotient edges
    whose ends must stay in different parts.  A node picks the part with the
    fewest linking options and either merges it with an unmarked neighbour
    (earlier neighbours get marked) or, when its degree allows, closes it.
    """

    def __init__(self, g: Graph, t: int, tr: _Tracker):
        self.t = t
        self.tr = tr
        self.verts = g.vertices
        index = {v: i for i, v in enumerate(self.verts)}
        self.n = len(self.verts)
        adj = [0] * self.n
        for u, v in g.edges():
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        self.adj0 = adj
        self.need_edges = comb(t, 2)

    def _sets(self, members, picked) -> list[frozenset[int]]:
        return [frozenset(self.verts[i] for i in _bits(members[v])) for v in picked]

    def greedy(self, attempts: int = 6) -> list[frozenset[int]] | None:
        """A few randomised min-degree contraction dives looking for a clique."""
        t = self.t
        for seed in range(attempts):
            rng = random.Random(seed)
            adj = list(self.adj0)
            members = [1 << i for i in range(self.n)]
            alive = (1 << self.n) - 1
            while alive.bit_count() >= t:
                self.tr.tick()
                clique = _find_clique(adj, alive, t)
                if clique is not None:
                    return self._sets(members, clique)
                verts = list(_bits(alive))
                dmin = min(adj[v].bit_count() for v in verts)
                x = rng.choice([v for v in verts if adj[v].bit_count() == dmin])
                if not adj[x]:
                    alive &= ~(1 << x)
                    continue
                ys = list(_bits(adj[x]))
                cmin = min((adj[x] & adj[y]).bit_count() for y in ys)
                y = rng.choice([y for y in ys if (adj[x] & adj[y]).bit_count() == cmin])
                alive = _merge(adj, None, members, alive, x, y)
        return None

    def run(self) -> list[frozenset[int]] | None:
        alive = (1 << self.n) - 1
        members = [1 << i for i in range(self.n)]
        return self._node(alive, list(self.adj0), [0] * self.n, members)

    def _node(self, alive, adj, sep, members):
        self.tr.tick()
        t = self.t
        count = alive.bit_count()
        if count < t:
            return None
        verts = list(_bits(alive))
        edges = sum(adj[v].bit_count() for v in verts) // 2
        # every remaining merge deletes at least the merged edge
        if edges - (count - t) < self.need_edges:
            return None
        clique = _find_clique(adj, alive, t)
        if clique is not None:
            return self._sets(members, clique)
        if count == t:
            return None

        # components along unmarked edges; each part of the final partition
        # lives inside one of them, two parts if it holds a marked edge
        comp_of = {}
        lower = 0
        for v in verts:
            if v in comp_of:
                continue
            cmask = 1 << v
            frontier = cmask
            while frontier:
                grow = 0
                for w in _bits(frontier):
                    grow |= adj[w] & ~sep[w]
                frontier = grow & ~cmask
                cmask |= frontier
            marked_inside = any(sep[w] & cmask for w in _bits(cmask))
            lower += 2 if marked_inside else 1
            if lower > t:
                return None
            for w in _bits(cmask):
                comp_of[w] = cmask

        best = None
        best_key = None
        for v in verts:
            free = adj[v] & ~sep[v]
            deg = adj[v].bit_count()
            if not free:
                # closed part: needs t-1 neighbours, and every other vertex must
                # be able to end up in a part touching it
                if deg < t - 1:
                    return None
                reach = 0
                for w in _bits(adj[v]):
                    reach |= comp_of[w]
                if alive & ~reach & ~(1 << v):
                    return None
                continue
            key = (deg >= t - 1, deg, free.bit_count())
            if best_key is None or key < best_key:
                best, best_key = v, key
        if best is None:
            return None

        x = best
        free = adj[x] & ~sep[x]
        order = sorted(_bits(free), key=lambda y: ((adj[x] & adj[y]).bit_count(), y))
        sep = list(sep)
        for y in order:
            c_adj, c_sep, c_members = list(adj), list(sep), list(members)
            c_alive = _merge(c_adj, c_sep, c_members, alive, x, y)
            found = self._node(c_alive, c_adj, c_sep, c_members)
            if found is not None:
                return found
            sep[x] |= 1 << y
            sep[y] |= 1 << x
        if adj[x].bit_count() >= t - 1:
            return self._node(alive, adj, sep, members)
        return None


def _merge(adj, sep, members, alive, x, y) -> int:
    """Contract quotient vertex ``y`` into ``x`` in place; returns the new alive mask."""
    bx, by = 1 << x, 1 << y
    for w in _bits(adj[y]):
        adj[w] = (adj[w] & ~by) | bx
    adj[x] = (adj[x] | adj[y]) & ~(bx | by)
    adj[y] = 0
    if sep is not None:
        for w in _bits(sep[y]):
            sep[w] = (sep[w] & ~by) | bx
        sep[x] = (sep[x] | sep[y]) & ~(bx | by)
        sep[y] = 0
    members[x] |= members[y]
    members[y] = 0
    return alive & ~by


def _find_clique(adj, alive, k):
    """Some ``k``-clique among ``alive`` quotient vertices, or None."""
    cand = 0
    for v in _bits(alive):
        if (adj[v] & alive).bit_count() >= k - 1:
            cand |= 1 << v
    if cand.bit_count() < k:
        return None

    def extend(chosen, cand):
        need = k - len(chosen)
        if need == 0:
            return chosen
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & adj[v]
            if nxt.bit_count() >= need - 1:
                found = extend(chosen + [v], nxt)
                if found is not None:
                    return found
        return None

    return extend([], cand)
