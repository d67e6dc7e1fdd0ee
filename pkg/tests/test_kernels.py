import os
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from bkpvc import _kernels_py, kernels

backends = [_kernels_py]
try:
    from bkpvc import _ckernels
except ImportError:  # pure-Python install
    _ckernels = None
else:
    backends.append(_ckernels)


def windows_hit(length, k, chosen):
    return all(any(j in chosen for j in range(i, i + k)) for i in range(length - k + 1))


def brute_extra(length, k, forced):
    free = [i for i in range(length) if i not in forced]
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            if windows_hit(length, k, set(forced) | set(extra)):
                return r


def test_dispatch_backend_name():
    assert kernels.BACKEND in ("python", "cython")
    forced_pure = os.environ.get("BKPVC_PURE_PYTHON", "") not in ("", "0")
    expected = "cython" if _ckernels is not None and not forced_pure else "python"
    assert kernels.BACKEND == expected


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__)
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_greedy_optimal_all_forced_subsets(mod, k):
    for length in range(0, 9):
        for r in range(length + 1):
            for forced in combinations(range(length), r):
                extra = mod.window_cover(length, k, forced)
                assert windows_hit(length, k, set(forced) | set(extra))
                assert len(extra) == brute_extra(length, k, forced)


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__)
def test_greedy_optimal_long_segments(mod):
    rng = random.Random(4)
    for length in range(9, 15):
        for k in (2, 3, 4, 6):
            samples = [(), (0,), (length - 1,), (0, length - 1)]
            samples += [tuple(sorted(rng.sample(range(length), rng.randint(1, 4)))) for _ in range(6)]
            for forced in samples:
                extra = mod.window_cover(length, k, forced)
                assert len(extra) == brute_extra(length, k, forced)


def test_window_cover_example():
    # path of 7 with both ends forced, k=3: one extra, the right end of window 1..3
    assert _kernels_py.window_cover(7, 3, [0, 6]) == [3]


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@settings(max_examples=300, deadline=None)
@given(st.integers(0, 40), st.integers(2, 8), st.sets(st.integers(0, 39)))
def test_window_cover_backends_agree(length, k, forced):
    forced = sorted(f for f in forced if f < length)
    assert _ckernels.window_cover(length, k, forced) == _kernels_py.window_cover(length, k, forced)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@settings(max_examples=300, deadline=None)
@given(st.integers(1, 14), st.data())
def test_hitting_backends_agree(n, data):
    forced = data.draw(st.sets(st.integers(0, n - 1)))
    fmask = sum(1 << v for v in forced)
    cands = [v for v in range(n) if v not in forced]
    masks = data.draw(st.lists(st.integers(1, (1 << n) - 1), max_size=12))
    assert _ckernels.min_hitting_superset(fmask, cands, masks) == \
        _kernels_py.min_hitting_superset(fmask, cands, masks)


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__)
def test_hitting_minimality(mod):
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 10)
        masks = [rng.randrange(1, 1 << n) for _ in range(rng.randint(0, 8))]
        s = mod.min_hitting_superset(0, list(range(n)), masks)
        assert all(m & s for m in masks)
        best = next(r for r in range(n + 1) for c in combinations(range(n), r)
                    if all(any(m >> v & 1 for v in c) for m in masks))
        assert bin(s).count("1") == best


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__)
def test_hitting_unreachable(mod):
    # vertex 2 is not a candidate and not forced, so mask 0b100 cannot be hit
    assert mod.min_hitting_superset(0b1, [1], [0b100]) == -1
    assert mod.min_hitting_superset(0b1, [1], [0b11]) == 0
