"""Pure-Python kernels. ``_ckernels.pyx`` mirrors these one for one."""
from itertools import combinations


def window_cover(length, k, forced):
    """Greedy extra picks so every k consecutive positions hold a chosen one.

    ``forced`` positions are already chosen. Scanning left to right, each
    window of k unchosen positions gets its rightmost position picked.
    Returns the picked positions in ascending order.
    """
    chosen = [False] * length
    for i in forced:
        chosen[i] = True
    extra = []
    last = -1
    for i in range(length):
        if chosen[i]:
            last = i
        elif i - last >= k:
            extra.append(i)
            last = i
    return extra


def min_hitting_superset(forced_mask, candidates, path_masks):
    """Smallest set ``S`` of candidates such that ``forced | S`` hits every mask.

    Subsets are tried by increasing size, each size in lexicographic order of
    candidate indices; the first hit wins. Returns the bitmask of ``S`` or -1
    if even all candidates do not suffice.
    """
    open_masks = [m for m in path_masks if not m & forced_mask]
    if not open_masks:
        return 0
    bits = [1 << v for v in candidates]
    for size in range(1, len(bits) + 1):
        for combo in combinations(bits, size):
            s = 0
            for b in combo:
                s |= b
            for m in open_masks:
                if not m & s:
                    break
            else:
                return s
    return -1
