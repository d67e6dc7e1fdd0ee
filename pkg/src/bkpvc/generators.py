"""Extremal families attaining the lower bounds, plus seeded random forests."""
from __future__ import annotations

import random

from .errors import InvalidParams
from .forest import (Forest, RootedDirectedForest, UndirectedForest,
                     build_directed, build_undirected)


def _check(i: int, k: int) -> None:
    if not isinstance(i, int) or i < 1:
        raise InvalidParams(f"family index must be >= 1, got {i!r}")
    if not isinstance(k, int) or k < 2:
        raise InvalidParams(f"k must be >= 2, got {k!r}")


def gen_directed_extremal(i: int, k: int) -> RootedDirectedForest:
    """Directed family member ``i``: ``k(2i-1)`` vertices, ``i`` leaves.

    Member 1 is a directed path on k vertices. Member ``j+1`` is a directed
    path on 2k vertices whose k-th vertex (counted from the root, 1-based)
    also has an arc to the root of a copy of member ``j``. The outermost path
    gets ids ``0..2k-1``; the copy follows at ``2k``.
    """
    _check(i, k)
    total = k * (2 * i - 1)
    parent: list = [None] * total
    base = 0
    for _ in range(i - 1):
        for j in range(1, 2 * k):
            parent[base + j] = base + j - 1
        parent[base + 2 * k] = base + k - 1
        base += 2 * k
    for j in range(1, k):
        parent[base + j] = base + j - 1
    return build_directed(parent)


def gen_undirected_extremal(i: int, k: int) -> UndirectedForest:
    """Undirected family member ``i``: ``k(2i-1)+1`` vertices, ``i+1`` leaves.

    Member 1 is a path on k+1 vertices. Each later member hangs two fresh
    k-vertex paths off the highest-id leaf of the previous one.
    """
    _check(i, k)
    edges = [(j, j + 1) for j in range(k)]
    n = k + 1
    leaf = k
    for _ in range(i - 1):
        for _arm in range(2):
            edges.append((leaf, n))
            edges.extend((n + j, n + j + 1) for j in range(k - 1))
            n += k
        leaf = n - 1
    return build_undirected(n, edges)


def gen_random(kind: str, n: int, seed: int, component_bias: float = 0.1) -> Forest:
    """Seeded random forest on ``n`` vertices.

    Each vertex after the first starts a new component with probability
    ``component_bias``; otherwise it hangs off its predecessor (half the time,
    giving long bare paths) or off a uniformly chosen earlier vertex. Labels
    are then shuffled. Not uniform over forests.
    """
    if kind not in ("directed", "undirected"):
        raise InvalidParams(f"unknown forest kind {kind!r}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"n must be >= 1, got {n!r}")
    if not 0.0 <= component_bias <= 1.0:
        raise InvalidParams(f"component_bias must lie in [0, 1], got {component_bias!r}")
    rng = random.Random(seed)
    attach: list = [None]
    for v in range(1, n):
        if rng.random() < component_bias:
            attach.append(None)
        elif rng.random() < 0.5:
            attach.append(v - 1)
        else:
            attach.append(rng.randrange(v))
    label = list(range(n))
    rng.shuffle(label)
    if kind == "directed":
        parent: list = [None] * n
        for v, p in enumerate(attach):
            if p is not None:
                parent[label[v]] = label[p]
        return build_directed(parent)
    return build_undirected(n, [(label[v], label[p]) for v, p in enumerate(attach) if p is not None])
