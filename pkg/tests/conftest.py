import random

import pytest

from bkpvc.forest import build_directed, build_undirected
from bkpvc.generators import gen_random


def star(leaves):
    return build_undirected(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(legs, leg_len):
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return build_undirected(nxt, edges)


def random_forests(count, n_max, seed, kinds=("directed", "undirected"), n_min=1):
    rng = random.Random(seed)
    for t in range(count):
        kind = kinds[t % len(kinds)]
        n = rng.randint(n_min, n_max)
        yield gen_random(kind, n, rng.randrange(2**32), component_bias=rng.choice([0.0, 0.1, 0.3, 0.6]))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
