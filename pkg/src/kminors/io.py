"""JSON and DOT serialisation for graphs and certificates."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphInputError
from .graph import Bipartition, Graph


def graph_to_dict(g: Graph, bip: Bipartition | None = None) -> dict:
    out = {
        "n": g.num_vertices,
        "vertices": list(g.vertices),
        "edges": [[u, v] for u, v in g.edges()],
    }
    if bip is not None:
        out["bipartition"] = {"A": sorted(bip.side_a), "B": sorted(bip.side_b)}
    return out


def graph_from_dict(data: dict) -> tuple[Graph, Bipartition | None]:
    """Parse the graph JSON object; loops and repeated edges are rejected."""
    if not isinstance(data, dict):
        raise GraphInputError("graph JSON must be an object")
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except KeyError as exc:
        raise GraphInputError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphInputError("'vertices' and 'edges' must be lists")
    if "n" in data and data["n"] != len(vertices):
        raise GraphInputError(f"n={data['n']} but {len(vertices)} vertices listed")
    seen = set()
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphInputError(f"edge {e!r} is not a pair")
        u, v = e
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"duplicate edge {list(key)}")
        seen.add(key)
        pairs.append((u, v))
    g = Graph(vertices, pairs)
    bip = None
    if data.get("bipartition") is not None:
        sides = data["bipartition"]
        try:
            bip = Bipartition(sides["A"], sides["B"])
        except (KeyError, TypeError):
            raise GraphInputError("bipartition needs lists 'A' and 'B'") from None
        bip.check(g)
    return g, bip


def dumps_graph(g: Graph, bip: Bipartition | None = None) -> str:
    return json.dumps(graph_to_dict(g, bip))


def loads_graph(text: str) -> tuple[Graph, Bipartition | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def save_graph(path, g: Graph, bip: Bipartition | None = None) -> None:
    Path(path).write_text(dumps_graph(g, bip) + "\n")


def load_graph(path) -> tuple[Graph, Bipartition | None]:
    return loads_graph(Path(path).read_text())


def cluster_to_dict(cluster) -> dict:
    return {"t": len(cluster.branch_sets), "branch_sets": [sorted(x) for x in cluster.branch_sets]}


def cluster_from_dict(data: dict, g: Graph | None = None):
    from .search import Cluster

    sets = [frozenset(x) for x in data["branch_sets"]]
    if data.get("t", len(sets)) != len(sets):
        raise GraphInputError(f"t={data['t']} but {len(sets)} branch sets listed")
    return Cluster(tuple(sets), g)


def to_dot(g: Graph, bip: Bipartition | None = None, name: str = "G") -> str:
    """Graphviz source; A-side vertices are boxes, B-side vertices circles."""
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        shape = "circle"
        if bip is not None and v in bip.side_a:
            shape = "box"
        lines.append(f"  {v} [shape={shape}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
