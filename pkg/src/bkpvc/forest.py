"""Undirected forests and rooted directed forests.

Vertices are dense integer ids ``0..n-1``. Both forest types are immutable
once built; use :func:`build_undirected` and :func:`build_directed` rather
than the dataclass constructors so the invariants get checked.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import CycleDetected, DuplicateEdge, InvalidVertex, SelfLoop


class VertexKind(str, enum.Enum):
    LEAF = "leaf"
    BRANCHING = "branching"
    PLAIN = "internal-plain"


@dataclass(frozen=True)
class UndirectedForest:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    directed = False

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def is_leaf(self, v: int) -> bool:
        return len(self.adj[v]) <= 1

    def is_branching(self, v: int) -> bool:
        return len(self.adj[v]) >= 3

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) <= 1]

    def branching_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) >= 3]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class RootedDirectedForest:
    n: int
    parent: tuple[Optional[int], ...]
    children: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    directed = True

    def out_degree(self, v: int) -> int:
        return len(self.children[v])

    degree = out_degree

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def is_branching(self, v: int) -> bool:
        return len(self.children[v]) >= 2

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children[v]]

    def branching_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.children[v]) >= 2]

    def roots(self) -> list[int]:
        return [v for v in range(self.n) if self.parent[v] is None]

    def depths(self) -> list[int]:
        """Arc distance from each vertex to the root of its component."""
        depth = [-1] * self.n
        stack = self.roots()
        for r in stack:
            depth[r] = 0
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                depth[c] = depth[v] + 1
                stack.append(c)
        return depth

    def components(self) -> list[list[int]]:
        comps = []
        for r in self.roots():
            stack, comp = [r], []
            while stack:
                v = stack.pop()
                comp.append(v)
                stack.extend(self.children[v])
            comps.append(sorted(comp))
        comps.sort()
        return comps


Forest = Union[UndirectedForest, RootedDirectedForest]


def build_undirected(n: int, edges: Iterable[Sequence[int]]) -> UndirectedForest:
    if n < 0:
        raise InvalidVertex(f"vertex count must be non-negative, got {n}")
    # union-find with path halving
    uf = list(range(n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    adj: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    norm = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertex(f"endpoint {x} out of range [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge {key} closes a cycle")
        uf[ru] = rv
        adj[u].append(v)
        adj[v].append(u)
        norm.append(key)
    return UndirectedForest(
        n=n,
        edges=tuple(sorted(norm)),
        adj=tuple(tuple(sorted(a)) for a in adj),
    )


def build_directed(parent: Sequence[Optional[int]]) -> RootedDirectedForest:
    n = len(parent)
    par: list[Optional[int]] = []
    children: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p is None:
            par.append(None)
            continue
        p = int(p)
        if not 0 <= p < n:
            raise InvalidVertex(f"parent {p} of vertex {v} out of range [0, {n})")
        if p == v:
            raise CycleDetected(f"vertex {v} is its own parent")
        par.append(p)
        children[p].append(v)

    # 0 = unvisited, 1 = on current chain, 2 = reaches a root
    state = [0] * n
    for s in range(n):
        chain = []
        v = s
        while v is not None and state[v] == 0:
            state[v] = 1
            chain.append(v)
            v = par[v]
        if v is not None and state[v] == 1:
            raise CycleDetected(f"parent pointers loop through vertex {v}")
        for w in chain:
            state[w] = 2
    return RootedDirectedForest(
        n=n,
        parent=tuple(par),
        children=tuple(tuple(sorted(c)) for c in children),
    )


def classify(forest: Forest) -> list[VertexKind]:
    kinds = []
    for v in range(forest.n):
        if forest.is_leaf(v):
            kinds.append(VertexKind.LEAF)
        elif forest.is_branching(v):
            kinds.append(VertexKind.BRANCHING)
        else:
            kinds.append(VertexKind.PLAIN)
    return kinds


def forced_vertices(forest: Forest) -> list[int]:
    """Vertices every cover must contain (leaves, isolated vertices included)."""
    return forest.leaves()


def directed_path(k: int) -> RootedDirectedForest:
    return build_directed([None] + list(range(k - 1)))


def undirected_path(n: int) -> UndirectedForest:
    return build_undirected(n, [(i, i + 1) for i in range(n - 1)])
