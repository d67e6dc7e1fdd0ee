"""JSON forest documents and DOT rendering."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .errors import InvalidParams
from .forest import Forest, RootedDirectedForest, build_directed, build_undirected


def forest_to_dict(forest: Forest) -> dict[str, Any]:
    if forest.directed:
        return {"kind": "directed", "n": forest.n, "parent": list(forest.parent)}
    return {"kind": "undirected", "n": forest.n, "edges": [list(e) for e in forest.edges]}


def forest_from_dict(doc: dict[str, Any]) -> Forest:
    kind = doc.get("kind")
    if kind == "undirected":
        return build_undirected(int(doc["n"]), doc.get("edges", []))
    if kind == "directed":
        parent = doc.get("parent", [])
        if "n" in doc and int(doc["n"]) != len(parent):
            raise InvalidParams(f"n={doc['n']} but parent array has {len(parent)} entries")
        return build_directed(parent)
    raise InvalidParams(f"unknown forest kind {kind!r}")


def dumps_forest(forest: Forest) -> str:
    return json.dumps(forest_to_dict(forest))


def load_forest(path: Union[str, Path]) -> Forest:
    with open(path) as fh:
        return forest_from_dict(json.load(fh))


def to_dot(forest: Forest, name: str = "F") -> str:
    """Render as Graphviz source; leaves are boxes, branching vertices diamonds."""
    lines = [f"{'digraph' if forest.directed else 'graph'} {name} {{"]
    for v in range(forest.n):
        if forest.is_leaf(v):
            lines.append(f"  {v} [shape=box];")
        elif forest.is_branching(v):
            lines.append(f"  {v} [shape=diamond];")
        else:
            lines.append(f"  {v};")
    if isinstance(forest, RootedDirectedForest):
        for v, p in enumerate(forest.parent):
            if p is not None:
                lines.append(f"  {p} -> {v};")
    else:
        for u, v in forest.edges:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
