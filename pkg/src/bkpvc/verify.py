"""Checking whether a vertex set is a branching k-path vertex cover.

Two independent routes give the same verdict:

* :func:`verify_naive` enumerates every k-vertex path (directed paths for
  rooted forests) and is the oracle.
* :func:`verify_fast` only looks at length-k windows of the bare segments,
  the paths left over once branching vertices are deleted.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import EmptyForest, InvalidK, InvalidVertex
from .forest import Forest


@dataclass(frozen=True)
class Violation:
    kind: str  # "uncovered-leaf" or "uncovered-path"
    witness: Union[int, tuple[int, ...]]

    def to_dict(self) -> dict:
        w = self.witness if isinstance(self.witness, int) else list(self.witness)
        return {"kind": self.kind, "witness": w}


@dataclass(frozen=True)
class BareSegmentDecomposition:
    segments: tuple[tuple[int, ...], ...]
    forced: tuple[tuple[int, ...], ...]  # per segment, positions of leaves of F


def check_k(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise InvalidK(f"k must be an integer >= 2, got {k!r}")


def as_cover(forest: Forest, cover: Iterable[int]) -> frozenset[int]:
    members = frozenset(int(v) for v in cover)
    for v in members:
        if not 0 <= v < forest.n:
            raise InvalidVertex(f"cover vertex {v} out of range [0, {forest.n})")
    return members


def _check_inputs(forest: Forest, k: int, cover: Iterable[int]) -> frozenset[int]:
    check_k(k)
    if forest.n < 1:
        raise EmptyForest("forest has no vertices")
    return as_cover(forest, cover)


def decompose_bare_segments(forest: Forest) -> BareSegmentDecomposition:
    """Split the non-branching vertices into maximal paths.

    Directed segments are listed in arc order. Undirected segments start at
    their lower-id endpoint. Segments are ordered by their first vertex.
    """
    if forest.n < 1:
        raise EmptyForest("forest has no vertices")
    bare = [not forest.is_branching(v) for v in range(forest.n)]
    segments = []
    if forest.directed:
        for v in range(forest.n):
            p = forest.parent[v]
            if not bare[v] or (p is not None and bare[p]):
                continue
            seg = [v]
            # non-branching vertices have at most one child
            while forest.children[seg[-1]] and bare[forest.children[seg[-1]][0]]:
                seg.append(forest.children[seg[-1]][0])
            segments.append(tuple(seg))
    else:
        seen = [False] * forest.n
        for v in range(forest.n):
            if not bare[v] or seen[v]:
                continue
            seen[v] = True
            arms = []
            for start in (w for w in forest.adj[v] if bare[w]):
                arm, prev, cur = [], v, start
                while cur is not None:
                    arm.append(cur)
                    seen[cur] = True
                    nxt = [w for w in forest.adj[cur] if bare[w] and w != prev]
                    prev, cur = cur, (nxt[0] if nxt else None)
                arms.append(arm)
            path = [v]
            if arms:
                path = arms[0][::-1] + path
            if len(arms) > 1:
                path = path + arms[1]
            if path[-1] < path[0]:
                path.reverse()
            segments.append(tuple(path))
        segments.sort()
    forced = tuple(
        tuple(i for i, v in enumerate(seg) if forest.is_leaf(v)) for seg in segments
    )
    return BareSegmentDecomposition(segments=tuple(segments), forced=forced)


def iter_k_paths(forest: Forest, k: int) -> Iterator[tuple[int, ...]]:
    """Every path on exactly k vertices, in lexicographic order.

    Undirected paths are yielded once, oriented so the first id is below the
    last; directed paths follow the arcs.
    """
    if forest.directed:
        nxt = forest.children
    else:
        nxt = forest.adj
    for s in range(forest.n):
        stack = [(s,)]
        found = []
        while stack:
            path = stack.pop()
            if len(path) == k:
                if forest.directed or path[0] < path[-1]:
                    found.append(path)
                continue
            for w in nxt[path[-1]]:
                if w not in path:
                    stack.append(path + (w,))
        found.sort()
        yield from found


def verify_naive(forest: Forest, k: int, cover: Iterable[int]) -> Optional[Violation]:
    """Return ``None`` when ``cover`` is valid, otherwise the first violation."""
    members = _check_inputs(forest, k, cover)
    for v in forest.leaves():
        if v not in members:
            return Violation("uncovered-leaf", v)
    for path in iter_k_paths(forest, k):
        if not any(forest.is_branching(v) or v in members for v in path):
            return Violation("uncovered-path", path)
    return None


def verify_fast(forest: Forest, k: int, cover: Iterable[int],
                decomposition: Optional[BareSegmentDecomposition] = None) -> Optional[Violation]:
    members = _check_inputs(forest, k, cover)
    dec = decomposition or decompose_bare_segments(forest)
    for seg, forced in zip(dec.segments, dec.forced):
        for i in forced:
            if seg[i] not in members:
                return Violation("uncovered-leaf", seg[i])
    for seg in dec.segments:
        last = -1
        for i, v in enumerate(seg):
            if v in members:
                last = i
            elif i - last >= k:
                window = seg[i - k + 1:i + 1]
                if not forest.directed and window[0] > window[-1]:
                    window = window[::-1]
                return Violation("uncovered-path", window)
    return None


def is_cover(forest: Forest, k: int, cover: Iterable[int]) -> bool:
    return verify_fast(forest, k, cover) is None
