# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py``; same signatures and results."""
from libc.stdlib cimport malloc, free


def window_cover(Py_ssize_t length, Py_ssize_t k, forced):
    cdef char *chosen = <char *> malloc(length + 1)
    cdef Py_ssize_t i, last = -1
    if chosen == NULL:
        raise MemoryError()
    extra = []
    try:
        for i in range(length):
            chosen[i] = 0
        for i in forced:
            chosen[i] = 1
        for i in range(length):
            if chosen[i]:
                last = i
            elif i - last >= k:
                extra.append(i)
                last = i
    finally:
        free(chosen)
    return extra


def min_hitting_superset(unsigned long long forced_mask, candidates, path_masks):
    cdef Py_ssize_t c = len(candidates), m_count = 0, size, i, j, pos
    cdef unsigned long long s, m
    cdef unsigned long long *bits
    cdef unsigned long long *masks
    cdef Py_ssize_t *idx
    cdef bint ok
    for v in candidates:
        if not 0 <= v < 64:
            raise OverflowError("vertex id does not fit a 64-bit mask")
    opened = [mm for mm in path_masks if not mm & forced_mask]
    if not opened:
        return 0
    bits = <unsigned long long *> malloc((c + 1) * sizeof(unsigned long long))
    masks = <unsigned long long *> malloc(len(opened) * sizeof(unsigned long long))
    idx = <Py_ssize_t *> malloc((c + 1) * sizeof(Py_ssize_t))
    if bits == NULL or masks == NULL or idx == NULL:
        free(bits); free(masks); free(idx)
        raise MemoryError()
    try:
        for i in range(c):
            bits[i] = (<unsigned long long> 1) << (<int> candidates[i])
        for mm in opened:
            masks[m_count] = mm
            m_count += 1
        for size in range(1, c + 1):
            for i in range(size):
                idx[i] = i
            while True:
                s = 0
                for i in range(size):
                    s |= bits[idx[i]]
                ok = True
                for j in range(m_count):
                    if not (masks[j] & s):
                        ok = False
                        break
                if ok:
                    return s
                # next combination in lexicographic order
                pos = size - 1
                while pos >= 0 and idx[pos] == c - size + pos:
                    pos -= 1
                if pos < 0:
                    break
                idx[pos] += 1
                for i in range(pos + 1, size):
                    idx[i] = idx[i - 1] + 1
        return -1
    finally:
        free(bits); free(masks); free(idx)
