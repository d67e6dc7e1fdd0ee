"""Exact minimum branching k-path vertex covers.

:func:`solve` splits the forest into bare segments and covers each one with a
left-to-right window greedy. :func:`solve_bruteforce` is the independent
oracle: subsets by increasing size, checked against every k-vertex path.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import EmptyForest, InvalidParams, TooLarge
from .forest import Forest
from .verify import check_k, decompose_bare_segments, iter_k_paths, verify_naive

BRUTEFORCE_CUTOFF = 18


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"value": self.value, "witness": list(self.witness)}


def solve(forest: Forest, k: int) -> SolveResult:
    check_k(k)
    if forest.n < 1:
        raise EmptyForest("forest has no vertices")
    dec = decompose_bare_segments(forest)
    chosen = set(forest.leaves())
    for seg, forced in zip(dec.segments, dec.forced):
        if len(seg) < k:
            continue
        for i in kernels.window_cover(len(seg), k, forced):
            chosen.add(seg[i])
    return SolveResult(len(chosen), tuple(sorted(chosen)))


def solve_bruteforce(forest: Forest, k: int, cutoff: int = BRUTEFORCE_CUTOFF) -> SolveResult:
    check_k(k)
    if forest.n < 1:
        raise EmptyForest("forest has no vertices")
    if forest.n > cutoff:
        raise TooLarge(f"n={forest.n} exceeds the brute-force cutoff {cutoff}")
    if forest.n > 64:
        raise InvalidParams("brute force works on 64-bit vertex masks")
    forced = forest.leaves()
    forced_mask = 0
    for v in forced:
        forced_mask |= 1 << v
    candidates = [v for v in range(forest.n) if not forced_mask >> v & 1]
    # a path through a branching vertex never needs a cover member
    path_masks = []
    for path in iter_k_paths(forest, k):
        if any(forest.is_branching(v) for v in path):
            continue
        m = 0
        for v in path:
            m |= 1 << v
        path_masks.append(m)
    extra = kernels.min_hitting_superset(forced_mask, candidates, path_masks)
    if extra < 0:
        raise AssertionError("the full vertex set must always be a cover")
    mask = forced_mask | extra
    witness = tuple(v for v in range(forest.n) if mask >> v & 1)
    violation = verify_naive(forest, k, witness)
    if violation is not None:
        raise AssertionError(f"brute-force witness fails verification: {violation}")
    return SolveResult(len(witness), witness)
