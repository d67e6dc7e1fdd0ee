"""Exhaustive enumeration of small forests, one per isomorphism class.

Every rooted forest on n vertices can be labelled so each parent id is below
its child's, so walking all such parent arrays reaches every class; duplicates
are dropped by an AHU-style canonical string.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator

from .forest import (Forest, RootedDirectedForest, UndirectedForest,
                     build_directed, build_undirected)


def _rooted_code(children, v) -> str:
    return "(" + "".join(sorted(_rooted_code(children, c) for c in children[v])) + ")"


def canonical_directed(forest: RootedDirectedForest) -> str:
    return "".join(sorted(_rooted_code(forest.children, r) for r in forest.roots()))


def _tree_centers(forest: UndirectedForest, comp: list[int]) -> list[int]:
    deg = {v: forest.degree(v) for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in forest.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def canonical_undirected(forest: UndirectedForest) -> str:
    codes = []
    for comp in forest.components():
        best = None
        for c in _tree_centers(forest, comp):
            children: dict[int, list[int]] = {}
            stack, seen = [c], {c}
            while stack:
                v = stack.pop()
                children[v] = [w for w in forest.adj[v] if w not in seen]
                seen.update(children[v])
                stack.extend(children[v])
            code = _rooted_code(children, c)
            if best is None or code < best:
                best = code
        codes.append(best)
    return "".join(sorted(codes))


def _parent_arrays(n: int) -> Iterator[list]:
    if n == 0:
        yield []
        return
    for rest in product(*[range(-1, v) for v in range(1, n)]):
        yield [None] + [None if p < 0 else p for p in rest]


def all_directed_forests(n: int) -> Iterator[RootedDirectedForest]:
    seen = set()
    for parent in _parent_arrays(n):
        f = build_directed(parent)
        key = canonical_directed(f)
        if key not in seen:
            seen.add(key)
            yield f


def all_undirected_forests(n: int) -> Iterator[UndirectedForest]:
    seen = set()
    for parent in _parent_arrays(n):
        f = build_undirected(n, [(v, p) for v, p in enumerate(parent) if p is not None])
        key = canonical_undirected(f)
        if key not in seen:
            seen.add(key)
            yield f


def all_forests(kind: str, n: int) -> Iterator[Forest]:
    return all_directed_forests(n) if kind == "directed" else all_undirected_forests(n)
