"""Lower bounds on the cover number, peeling certificates, and the reduction
from undirected to rooted directed forests.

The directed bound is certified by peeling: repeatedly strip either a leaf
path ending at a root or at a cover member, or the whole fan of leaf paths
under a deepest branching vertex. Each step pays for itself against the
bound, so replaying a trace proves ``|P| >= (n + k) / (2k)`` for that cover.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (CertificateError, DomainViolation, EmptyForest,
                     MismatchedInputs, NotACover)
from .forest import (RootedDirectedForest, UndirectedForest, build_directed)
from .verify import as_cover, check_k, verify_fast

DIRECTED = "directed"
UNDIRECTED = "undirected"


@dataclass(frozen=True)
class BoundValue:
    kind: str
    n: int
    k: int
    numerator: int
    denominator: int
    ceiling: int

    @property
    def exact(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind, "n": self.n, "k": self.k,
            "numerator": self.numerator, "denominator": self.denominator,
            "exact": str(self.exact), "ceiling": self.ceiling,
        }


def lower_bound(kind: str, n: int, k: int) -> BoundValue:
    check_k(k)
    if kind == DIRECTED:
        if n < 1:
            raise DomainViolation("directed bound needs n >= 1")
        num = n + k
    elif kind == UNDIRECTED:
        if n < 2:
            raise DomainViolation("undirected bound needs n >= 2")
        num = n + 3 * k - 1
    else:
        raise DomainViolation(f"unknown forest kind {kind!r}")
    den = 2 * k
    return BoundValue(kind, n, k, num, den, -(-num // den))


# -- peeling certificate ----------------------------------------------------

BASE = "base"
PATH_REMOVAL = "path-removal"
BRANCHING_FAN = "branching-fan"


@dataclass(frozen=True)
class PeelStep:
    case: str
    removed: tuple[int, ...]
    p_removed: int
    n_before: int
    cover_before: int
    cover_after: int
    stop: Optional[str] = None  # path-removal: "root" or "cover-parent"
    kept_branching: Optional[int] = None
    fan_width: Optional[int] = None
    u_added: bool = False

    def to_dict(self) -> dict:
        d = {
            "case": self.case,
            "removed": list(self.removed),
            "p_removed": self.p_removed,
            "n_before": self.n_before,
            "cover_before": self.cover_before,
            "cover_after": self.cover_after,
        }
        if self.case == PATH_REMOVAL:
            d["stop"] = self.stop
        if self.case == BRANCHING_FAN:
            d.update(kept_branching=self.kept_branching, fan_width=self.fan_width,
                     u_added=self.u_added)
        return d


@dataclass(frozen=True)
class PeelTrace:
    n: int
    k: int
    steps: tuple[PeelStep, ...]
    cover_size: int
    bound: BoundValue

    @property
    def certified(self) -> int:
        """Lower bound on the cover size obtained by composing the steps.

        The base contributes 1, each path removal 1, each fan ``b - 1``.
        """
        total = 0
        for s in self.steps:
            if s.case == BRANCHING_FAN:
                total += s.fan_width - 1
            else:
                total += 1
        return total

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "cover_size": self.cover_size,
            "certified": self.certified,
            "bound": self.bound.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
        }


class _Residual:
    """Mutable view of a rooted forest under vertex deletions."""

    def __init__(self, forest: RootedDirectedForest, cover: Iterable[int]):
        self.parent = list(forest.parent)
        self.children = [set(c) for c in forest.children]
        self.alive = set(range(forest.n))
        self.cover = set(cover)
        self.depth = forest.depths()

    def is_branching(self, v):
        return len(self.children[v]) >= 2

    def leaves(self):
        return sorted(v for v in self.alive if not self.children[v])

    def remove(self, vertices):
        for v in vertices:
            if v not in self.alive:
                raise CertificateError(f"vertex {v} removed twice")
            if self.children[v] - set(vertices):
                raise CertificateError(f"vertex {v} removed while it still has children")
        for v in vertices:
            self.alive.discard(v)
            self.cover.discard(v)
            p = self.parent[v]
            if p is not None and p in self.alive:
                self.children[p].discard(v)

    def leaf_path(self, leaf):
        """Walk up from ``leaf``; return (path top-down, stop reason, parent u)."""
        path = [leaf]
        while True:
            u = self.parent[path[-1]]
            if u is None:
                return path[::-1], "root", None
            if self.is_branching(u):
                return path[::-1], "branching", u
            if u in self.cover:
                return path[::-1], "cover-parent", u
            path.append(u)


def peel_certificate(forest: RootedDirectedForest, k: int, cover: Iterable[int]) -> PeelTrace:
    check_k(k)
    if not isinstance(forest, RootedDirectedForest):
        raise MismatchedInputs("peeling needs a rooted directed forest")
    if forest.n < 1:
        raise EmptyForest("forest has no vertices")
    members = as_cover(forest, cover)
    violation = verify_fast(forest, k, members)
    if violation is not None:
        raise NotACover(f"not a branching {k}-path vertex cover: {violation.to_dict()}")

    res = _Residual(forest, members)
    steps = []
    while len(res.alive) > k:
        n_before, cover_before = len(res.alive), len(res.cover)
        fans = []
        for leaf in res.leaves():
            path, why, u = res.leaf_path(leaf)
            if len(path) > k:
                raise CertificateError(f"leaf path {path} longer than k={k}")
            if why != "branching":
                res.remove(path)
                steps.append(PeelStep(
                    PATH_REMOVAL, tuple(path), 1, n_before, cover_before,
                    len(res.cover), stop=why,
                ))
                break
            fans.append((-res.depth[u], u, leaf))
        else:
            _, u, _ = min(fans)
            below = []
            for c in sorted(res.children[u]):
                v = c
                while True:
                    below.append(v)
                    kids = res.children[v]
                    if len(kids) >= 2:
                        raise CertificateError(
                            f"branching vertex {v} below the deepest fan root {u}")
                    if not kids:
                        break
                    v = next(iter(kids))
            b = len(res.children[u])
            p_removed = sum(1 for v in below if v in res.cover)
            if p_removed != b:
                raise CertificateError(f"fan under {u} holds {p_removed} cover vertices, expected {b}")
            added = u not in res.cover
            res.remove(below)
            res.cover.add(u)
            steps.append(PeelStep(
                BRANCHING_FAN, tuple(below), p_removed, n_before, cover_before,
                len(res.cover), kept_branching=u, fan_width=b, u_added=added,
            ))
    rest = sorted(res.alive)
    n_before, cover_before = len(rest), len(res.cover)
    if cover_before < 1:
        raise CertificateError("base forest has no cover vertex")
    res.remove(sorted(rest, key=lambda v: -res.depth[v]))
    steps.append(PeelStep(BASE, tuple(rest), cover_before, n_before, cover_before, 0))
    return PeelTrace(forest.n, k, tuple(steps), len(members), lower_bound(DIRECTED, forest.n, k))


def check_certificate(forest: RootedDirectedForest, k: int, cover: Iterable[int],
                      trace: PeelTrace) -> Fraction:
    """Replay ``trace`` on ``forest`` and check every accounting step.

    Returns the certified bound as a fraction; raises :class:`CertificateError`
    on the first failed check.
    """
    members = as_cover(forest, cover)
    if trace.n != forest.n or trace.k != k or trace.cover_size != len(members):
        raise CertificateError("trace does not belong to these inputs")
    res = _Residual(forest, members)
    bound = lambda m: Fraction(m + k, 2 * k)  # noqa: E731
    added_total = 0
    for idx, step in enumerate(trace.steps):
        n_before = len(res.alive)
        if n_before != step.n_before or len(res.cover) != step.cover_before:
            raise CertificateError(f"step {idx}: residual sizes disagree")
        last = idx == len(trace.steps) - 1
        if step.case == BASE:
            if not last or not 1 <= n_before <= k or set(step.removed) != res.alive:
                raise CertificateError(f"step {idx}: malformed base step")
            if step.p_removed != len(res.cover) or step.p_removed < 1:
                raise CertificateError(f"step {idx}: base step has no cover vertex")
            if not 1 >= bound(n_before):
                raise CertificateError(f"step {idx}: base inequality fails")
            res.remove(sorted(step.removed, key=lambda v: -res.depth[v]))
            continue
        if last or n_before <= k:
            raise CertificateError(f"step {idx}: inductive step on a base-size forest")
        path = list(step.removed)
        if step.case == PATH_REMOVAL:
            q = len(path)
            if not 1 <= q <= k:
                raise CertificateError(f"step {idx}: path on {q} vertices, k={k}")
            if res.children[path[-1]]:
                raise CertificateError(f"step {idx}: path does not end at a leaf")
            for a, b in zip(path, path[1:]):
                if res.parent[b] != a:
                    raise CertificateError(f"step {idx}: {a}->{b} is not an arc")
            if any(res.is_branching(v) for v in path):
                raise CertificateError(f"step {idx}: path has a branching vertex")
            top_parent = res.parent[path[0]]
            if top_parent is not None and (top_parent not in res.cover
                                           or res.is_branching(top_parent)):
                raise CertificateError(f"step {idx}: path stops at neither root nor cover vertex")
            if [v for v in path if v in res.cover] != [path[-1]] or step.p_removed != 1:
                raise CertificateError(f"step {idx}: path must hold exactly its leaf")
            res.remove(path)
            if not bound(n_before - q) + 1 >= bound(n_before):
                raise CertificateError(f"step {idx}: path inequality fails")
        elif step.case == BRANCHING_FAN:
            u, b = step.kept_branching, step.fan_width
            if u not in res.alive or b != len(res.children[u]) or b < 2:
                raise CertificateError(f"step {idx}: bad fan root or width")
            subtree, stack = [], list(res.children[u])
            while stack:
                v = stack.pop()
                subtree.append(v)
                stack.extend(res.children[v])
            if sorted(subtree) != sorted(path):
                raise CertificateError(f"step {idx}: fan does not remove exactly the subtree of {u}")
            if any(res.is_branching(v) for v in path):
                raise CertificateError(f"step {idx}: fan contains another branching vertex")
            if len(path) > b * k:
                raise CertificateError(f"step {idx}: fan removes more than b*k vertices")
            if sum(1 for v in path if v in res.cover) != b or step.p_removed != b:
                raise CertificateError(f"step {idx}: fan cover count differs from b")
            if step.u_added != (u not in res.cover):
                raise CertificateError(f"step {idx}: u_added flag is wrong")
            res.remove(path)
            res.cover.add(u)
            added_total += step.u_added
            if not bound(n_before - len(path)) + b - 1 >= bound(n_before):
                raise CertificateError(f"step {idx}: fan inequality fails")
        else:
            raise CertificateError(f"step {idx}: unknown case {step.case!r}")
        if len(res.cover) != step.cover_after:
            raise CertificateError(f"step {idx}: cover size after step disagrees")
    if res.alive:
        raise CertificateError("replay leaves vertices behind")
    if sum(s.p_removed for s in trace.steps) - added_total != len(members):
        raise CertificateError("cover accounting does not add up to |P|")
    certified = trace.certified
    if not len(members) >= certified >= bound(forest.n):
        raise CertificateError("composed accounting does not certify the bound")
    return Fraction(certified)


# -- reduction from undirected to directed ---------------------------------

@dataclass(frozen=True)
class ReductionResult:
    H: RootedDirectedForest
    vertex_map: tuple[int, ...]  # H id -> F id
    removed_per_component: tuple[tuple[int, Optional[int]], ...]  # (removed, new root) in F ids
    p: int
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {v: i for i, v in enumerate(self.vertex_map)})

    def restrict(self, cover: Iterable[int]) -> tuple[int, ...]:
        """``P ∩ V(H)`` expressed in H ids."""
        return tuple(sorted(self.index[v] for v in cover if v in self.index))

    def to_dict(self) -> dict:
        return {
            "H": {"kind": "directed", "n": self.H.n, "parent": list(self.H.parent)},
            "vertex_map": list(self.vertex_map),
            "removed_per_component": [list(x) for x in self.removed_per_component],
            "p": self.p,
        }


def reduce_to_directed(forest: UndirectedForest) -> ReductionResult:
    """Drop one leaf per component and orient the rest away from its neighbour."""
    if not isinstance(forest, UndirectedForest):
        raise MismatchedInputs("reduction needs an undirected forest")
    if forest.n < 2:
        raise DomainViolation("reduction needs n >= 2")
    parent_f: dict[int, Optional[int]] = {}
    removed = []
    for comp in forest.components():
        if len(comp) == 1:
            removed.append((comp[0], None))
            continue
        u = min(v for v in comp if forest.degree(v) == 1)
        root = forest.adj[u][0]
        removed.append((u, root))
        parent_f[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in forest.adj[x]:
                if y != u and y not in parent_f:
                    parent_f[y] = x
                    queue.append(y)
    vertex_map = tuple(sorted(parent_f))
    index = {v: i for i, v in enumerate(vertex_map)}
    H = build_directed([None if parent_f[v] is None else index[parent_f[v]] for v in vertex_map])
    return ReductionResult(H, vertex_map, tuple(removed), len(removed))


def branching_preserved(forest: UndirectedForest, reduction: ReductionResult) -> bool:
    """Every vertex kept in H that branches in F also branches in H."""
    kept = set(reduction.vertex_map)
    dropped = [r for r, _ in reduction.removed_per_component]
    if (reduction.H.n != len(reduction.vertex_map)
            or reduction.H.n + reduction.p != forest.n
            or any(not 0 <= v < forest.n for v in kept | set(dropped))
            or kept & set(dropped)
            or len(reduction.removed_per_component) != len(forest.components())):
        raise MismatchedInputs("reduction was not produced from this forest")
    for h, v in enumerate(reduction.vertex_map):
        if forest.is_branching(v) and not reduction.H.is_branching(h):
            return False
    return True
