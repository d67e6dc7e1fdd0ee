"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from bkpvc import _kernels_py, kernels
from bkpvc.generators import gen_random
from bkpvc.forest import undirected_path
from bkpvc.verify import iter_k_paths

try:
    from bkpvc import _ckernels
except ImportError:
    _ckernels = None


def bruteforce_workload():
    rng = random.Random(1)
    cases = [(undirected_path(18), 2), (undirected_path(18), 3)]
    for _ in range(200):
        kind = rng.choice(["directed", "undirected"])
        cases.append((gen_random(kind, rng.randint(10, 18), rng.randrange(2**32), 0.1), rng.randint(2, 4)))
    # path masks are precomputed so only the subset search is timed
    prepared = []
    for f, k in cases:
        forced = sum(1 << v for v in f.leaves())
        cands = [v for v in range(f.n) if not forced >> v & 1]
        masks = [sum(1 << v for v in p) for p in iter_k_paths(f, k)
                 if not any(f.is_branching(v) for v in p)]
        prepared.append((forced, cands, masks))
    return prepared


def window_workload():
    rng = random.Random(2)
    out = []
    for _ in range(2000):
        length = rng.randint(1, 400)
        forced = sorted(rng.sample(range(length), rng.randint(0, min(length, 5))))
        out.append((length, rng.randint(2, 8), forced))
    return out


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:<10} {best * 1e3:9.2f} ms")
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"active backend: {kernels.BACKEND}")
    backends = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])

    hs = bruteforce_workload()
    wc = window_workload()
    for name, call in [
        ("min_hitting_superset (202 forests, n<=18)",
         lambda mod: lambda: [mod.min_hitting_superset(*a) for a in hs]),
        ("window_cover (2000 segments, len<=400)",
         lambda mod: lambda: [mod.window_cover(*a) for a in wc]),
    ]:
        print(name)
        times = {label: bench(label, call(mod), args.repeat) for label, mod in backends}
        if len(times) == 2:
            print(f"  speedup    {times['python'] / times['cython']:9.1f}x")
        results = [call(mod)() for _, mod in backends]
        assert all(r == results[0] for r in results), "backends disagree"


if __name__ == "__main__":
    main()
