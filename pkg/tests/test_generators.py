import pytest

from bkpvc.bounds import lower_bound
from bkpvc.enumerate import (all_directed_forests, all_undirected_forests,
                             canonical_directed, canonical_undirected)
from bkpvc.errors import InvalidParams
from bkpvc.forest import build_directed, build_undirected
from bkpvc.generators import gen_directed_extremal, gen_random, gen_undirected_extremal
from bkpvc.io import forest_to_dict
from bkpvc.solver import solve, solve_bruteforce


def test_directed_f1_is_path():
    f = gen_directed_extremal(1, 3)
    assert f.parent == (None, 0, 1)
    assert solve(f, 3).value == 1


def test_directed_f3_k2():
    f = gen_directed_extremal(3, 2)
    assert f.n == 10 and len(f.leaves()) == 3
    assert solve(f, 2).value == 3 == lower_bound("directed", 10, 2).exact
    assert solve_bruteforce(f, 2).value == 3


def test_undirected_f1_k4():
    f = gen_undirected_extremal(1, 4)
    assert f.edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert len(f.leaves()) == 2 and solve(f, 4).value == 2


def test_undirected_f2_k2():
    f = gen_undirected_extremal(2, 2)
    assert f.n == 7 and len(f.leaves()) == 3
    assert solve(f, 2).value == 3 == lower_bound("undirected", 7, 2).exact
    assert solve_bruteforce(f, 2).value == 3


@pytest.mark.parametrize("i", range(1, 9))
@pytest.mark.parametrize("k", range(2, 7))
def test_family_shape(i, k):
    d = gen_directed_extremal(i, k)
    assert d.n == k * (2 * i - 1)
    assert len(d.leaves()) == i and len(d.branching_vertices()) == i - 1
    assert d.roots() == [0]
    u = gen_undirected_extremal(i, k)
    assert u.n == k * (2 * i - 1) + 1 and len(u.leaves()) == i + 1
    assert len(u.components()) == 1


def _strip_directed(f, k):
    """Drop the outer 2k-path (ids 0..2k-1); the rest is relabelled from 0."""
    rest = list(range(2 * k, f.n))
    idx = {v: i for i, v in enumerate(rest)}
    return build_directed([idx.get(f.parent[v]) for v in rest])


def _strip_undirected(f, k):
    """Drop the two most recently attached k-paths (the highest ids)."""
    n = f.n - 2 * k
    return build_undirected(n, [e for e in f.edges if e[1] < n])


@pytest.mark.parametrize("k", [2, 3, 5])
def test_structural_recurrence(k):
    for i in range(1, 7):
        nxt_d, cur_d = gen_directed_extremal(i + 1, k), gen_directed_extremal(i, k)
        assert canonical_directed(_strip_directed(nxt_d, k)) == canonical_directed(cur_d)
        nxt_u, cur_u = gen_undirected_extremal(i + 1, k), gen_undirected_extremal(i, k)
        assert canonical_undirected(_strip_undirected(nxt_u, k)) == canonical_undirected(cur_u)


def test_attachment_reading_matters():
    # attaching at vertex number k from the leaf end instead loses tightness
    k = 3
    parent = [None] + list(range(2 * k - 1)) + [2 * k - k] + [2 * k, 2 * k + 1]
    f = build_directed(parent)
    assert solve(f, k).value > 2


def test_invalid_params():
    for bad in [(0, 2), (1, 1)]:
        with pytest.raises(InvalidParams):
            gen_directed_extremal(*bad)
        with pytest.raises(InvalidParams):
            gen_undirected_extremal(*bad)
    with pytest.raises(InvalidParams):
        gen_random("directed", 0, 1)
    with pytest.raises(InvalidParams):
        gen_random("mixed", 5, 1)


def test_random_single_vertex():
    for seed in range(20):
        assert gen_random("directed", 1, seed).parent == (None,)
        assert gen_random("undirected", 1, seed).edges == ()


def test_random_deterministic():
    for kind in ("directed", "undirected"):
        a = gen_random(kind, 50, 123, 0.2)
        b = gen_random(kind, 50, 123, 0.2)
        assert forest_to_dict(a) == forest_to_dict(b)
        assert forest_to_dict(a) != forest_to_dict(gen_random(kind, 50, 124, 0.2))


def test_random_campaign_valid():
    for seed in range(1000):
        for kind in ("directed", "undirected"):
            f = gen_random(kind, 50, seed, (seed % 7) / 10)
            assert f.n == 50 and f.leaves()


def test_component_bias_extremes():
    assert len(gen_random("undirected", 30, 1, 0.0).components()) == 1
    assert len(gen_random("directed", 30, 1, 1.0).roots()) == 30


# unlabeled rooted forests on n vertices = rooted trees on n+1 (OEIS A000081)
# unlabeled forests on n vertices (OEIS A005195)
@pytest.mark.parametrize("n,rooted,free", [
    (1, 1, 1), (2, 2, 2), (3, 4, 3), (4, 9, 6), (5, 20, 10), (6, 48, 20), (7, 115, 37),
])
def test_enumeration_counts(n, rooted, free):
    assert sum(1 for _ in all_directed_forests(n)) == rooted
    assert sum(1 for _ in all_undirected_forests(n)) == free
