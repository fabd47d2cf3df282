"""Immutable simple graphs, bipartitions and the minor operations on them.

Vertex ids are small non-negative integers.  Every operation returns a new
graph; ids survive deletion and induction unchanged, and a contraction
allocates the smallest id not used by its input graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .errors import GraphInputError, PreconditionError

VertexSet = frozenset  # frozenset[int]; interpreted against some Graph
Side = Literal["A", "B"]


class Graph:
    """Simple undirected graph over integer vertex ids.

    >>> g = Graph(range(3), [(0, 1), (1, 2)])
    >>> g.num_edges, g.degree(1)
    (2, 2)
    """

    __slots__ = ("_adj", "_vertices", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            v = _check_id(v)
            if v in adj:
                raise GraphInputError(f"duplicate vertex id {v}")
            adj[v] = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphInputError(f"edge {e!r} is not a pair") from None
            u, v = _check_id(u), _check_id(v)
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._set_adj({v: frozenset(nb) for v, nb in adj.items()})

    def _set_adj(self, adj: dict[int, frozenset[int]]) -> None:
        self._adj = adj
        self._vertices = tuple(sorted(adj))
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: dict[int, frozenset[int]]) -> "Graph":
        # trusted constructor: adj must already be symmetric and loop-free
        g = cls.__new__(cls)
        g._set_adj(adj)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(range(n), [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(range(n), [(i, (i + 1) % n) for i in range(n)])

    # -- read access -------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphInputError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(len(nb) for nb in self._adj.values()).items()))

    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj.values()), default=0)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges})"

    # -- derived graphs ----------------------------------------------------

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Copy of this graph with extra edges (already-present ones are ignored)."""
        return Graph(self._vertices, list(self.edges()) + [tuple(e) for e in edges
                                                           if not self.has_edge(*e)])

    def with_vertex(self, v: int, neighbors: Iterable[int] = ()) -> "Graph":
        if v in self._adj:
            raise GraphInputError(f"vertex {v} already present")
        return Graph(self._vertices + (v,), self.edges() + [(v, u) for u in neighbors])

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Rename vertices; ids missing from ``mapping`` keep their name."""
        f = lambda v: mapping.get(v, v)  # noqa: E731
        return Graph([f(v) for v in self._vertices], [(f(u), f(v)) for u, v in self.edges()])

    def is_connected(self, subset: Iterable[int] | None = None) -> bool:
        """Whether the subgraph induced on ``subset`` (default: all) is connected.

        The empty set counts as disconnected.
        """
        verts = set(self._vertices if subset is None else subset)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        h.add_edges_from(self.edges())
        return h

    @classmethod
    def from_networkx(cls, h) -> "Graph":
        return cls(h.nodes, h.edges)


def _check_id(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise GraphInputError(f"vertex id must be a non-negative integer, got {v!r}")
    return int(v)


@dataclass(frozen=True)
class Bipartition:
    """Sides ``A`` and ``B`` of a bipartite graph."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    def __init__(self, side_a: Iterable[int], side_b: Iterable[int]):
        object.__setattr__(self, "side_a", frozenset(side_a))
        object.__setattr__(self, "side_b", frozenset(side_b))

    def side(self, name: Side) -> frozenset[int]:
        if name == "A":
            return self.side_a
        if name == "B":
            return self.side_b
        raise GraphInputError(f"side must be 'A' or 'B', got {name!r}")

    def side_of(self, v: int) -> Side:
        if v in self.side_a:
            return "A"
        if v in self.side_b:
            return "B"
        raise GraphInputError(f"vertex {v} is on neither side")

    def check(self, g: Graph) -> None:
        """Raise :class:`GraphInputError` unless this is a bipartition of ``g``."""
        if self.side_a & self.side_b:
            raise GraphInputError(f"sides overlap in {sorted(self.side_a & self.side_b)}")
        if self.side_a | self.side_b != set(g.vertices):
            raise GraphInputError("sides do not cover exactly the vertex set")
        for u, v in g.edges():
            if (u in self.side_a) == (v in self.side_a):
                raise GraphInputError(f"edge ({u}, {v}) lies inside one side")

    def is_valid_for(self, g: Graph) -> bool:
        try:
            self.check(g)
        except GraphInputError:
            return False
        return True


def _as_subset(g: Graph, x: Iterable[int]) -> frozenset[int]:
    x = frozenset(x)
    missing = [v for v in x if v not in g]
    if missing:
        raise GraphInputError(f"unknown vertex ids {sorted(missing)}")
    return x


def delete_vertices(g: Graph, x: Iterable[int]) -> Graph:
    """``G \\ X``: remove ``x`` and every edge touching it."""
    x = _as_subset(g, x)
    if not x:
        return g
    return Graph._from_adj({v: nb - x for v, nb in g.adjacency().items() if v not in x})


def induced_subgraph(g: Graph, x: Iterable[int]) -> Graph:
    x = _as_subset(g, x)
    return delete_vertices(g, set(g.vertices) - x)


def fresh_id(g: Graph) -> int:
    """Smallest non-negative integer that is not a vertex of ``g``."""
    used = set(g.vertices)
    v = 0
    while v in used:
        v += 1
    return v


def contract_set(g: Graph, x: Iterable[int]) -> tuple[Graph, int]:
    """Contract the connected set ``x`` to one new vertex.

    Returns the contracted graph and the id of the new vertex, which is the
    smallest id unused in ``g`` (so it never collides with an id of ``x``).
    """
    x = _as_subset(g, x)
    if not x:
        raise PreconditionError("cannot contract an empty set")
    if not g.is_connected(x):
        raise PreconditionError(f"set {sorted(x)} does not induce a connected subgraph")
    new = fresh_id(g)
    adj = g.adjacency()
    boundary = frozenset().union(*(adj[v] for v in x)) - x
    out = {v: (nb - x) | ({new} if v in boundary else frozenset())
           for v, nb in adj.items() if v not in x}
    out[new] = boundary
    return Graph._from_adj(out), new


def contract_into_side(g: Graph, bip: Bipartition, x: Iterable[int], side: Side) -> tuple[Graph, Bipartition]:
    """Contract ``x`` to a vertex and drop its edges into ``side``.

    The new vertex joins ``side``, so the result is bipartite again with
    bipartition ``((A \\ X) + {x}, B \\ X)`` for ``side == "A"``.
    """
    keep = bip.side(side)
    other = bip.side("B" if side == "A" else "A")
    x = _as_subset(g, x)
    h, new = contract_set(g, x)
    adj = h.adjacency()
    dropped = adj[new] & keep
    adj[new] = adj[new] - dropped
    for v in dropped:
        adj[v] = adj[v] - {new}
    h = Graph._from_adj(adj)
    same = (keep - x) | {new}
    rest = other - x
    out = Bipartition(same, rest) if side == "A" else Bipartition(rest, same)
    return h, out


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen: set[int] = set()
    out = []
    adj = g.adjacency()
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def bipartition_of(g: Graph) -> Bipartition | None:
    """A 2-colouring of ``g`` (smallest vertex of each component on side A), or None."""
    colour: dict[int, int] = {}
    adj = g.adjacency()
    for s in g.vertices:
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None
    return Bipartition([v for v, c in colour.items() if c == 0], [v for v, c in colour.items() if c == 1])
