import pytest
from hypothesis import given, settings, strategies as st

from bkpvc.errors import CycleDetected, DuplicateEdge, InvalidVertex, SelfLoop
from bkpvc.forest import (VertexKind, build_directed, build_undirected, classify,
                          directed_path, undirected_path)
from bkpvc.generators import gen_directed_extremal, gen_random, gen_undirected_extremal
from bkpvc.io import forest_from_dict, forest_to_dict, to_dot

from conftest import star


def test_single_isolated_vertex():
    f = build_undirected(1, [])
    assert f.n == 1 and f.edges == ()
    assert classify(f) == [VertexKind.LEAF]


def test_empty_forests_are_valid():
    assert build_undirected(0, []).n == 0
    assert build_directed([]).n == 0


@pytest.mark.parametrize("n,edges,exc", [
    (3, [(0, 1), (1, 2), (2, 0)], CycleDetected),
    (2, [(0, 2)], InvalidVertex),
    (2, [(0, 1), (1, 0)], DuplicateEdge),
    (2, [(1, 1)], SelfLoop),
    (4, [(0, 1), (1, 2), (2, 3), (3, 1)], CycleDetected),
])
def test_undirected_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_undirected(n, edges)


@pytest.mark.parametrize("parent,exc", [
    ([1, 0], CycleDetected),
    ([0], CycleDetected),
    ([None, 2, 3, 1], CycleDetected),
    ([None, 5], InvalidVertex),
])
def test_directed_rejects(parent, exc):
    with pytest.raises(exc):
        build_directed(parent)


def test_undirected_extremal_f2_is_one_tree():
    f = gen_undirected_extremal(2, 2)
    assert f.n == 7
    assert len(f.components()) == 1


def test_directed_single_root():
    f = build_directed([None])
    assert f.roots() == [0] and f.leaves() == [0] and f.branching_vertices() == []


def test_directed_path_k4():
    f = directed_path(4)
    assert f.roots() == [0] and f.leaves() == [3] and f.branching_vertices() == []


def test_classify_star():
    kinds = classify(star(3))
    assert kinds[0] is VertexKind.BRANCHING
    assert kinds[1:] == [VertexKind.LEAF] * 3


def test_classify_directed_path():
    kinds = classify(directed_path(5))
    assert kinds.count(VertexKind.LEAF) == 1 and kinds[4] is VertexKind.LEAF
    assert kinds.count(VertexKind.PLAIN) == 4
    assert kinds.count(VertexKind.BRANCHING) == 0


def test_classify_directed_extremal_attachment_vertex():
    k = 3
    f = gen_directed_extremal(2, k)
    # vertex number k on the outer path, counted 1-based from the root
    assert f.out_degree(k - 1) == 2
    assert classify(f)[k - 1] is VertexKind.BRANCHING


def test_undirected_degree_two_is_plain():
    assert classify(undirected_path(3)) == [VertexKind.LEAF, VertexKind.PLAIN, VertexKind.LEAF]


forest_params = st.tuples(st.sampled_from(["directed", "undirected"]),
                          st.integers(1, 60), st.integers(0, 2**31), st.floats(0, 1))


@settings(max_examples=300, deadline=None)
@given(forest_params)
def test_structural_invariants(params):
    kind, n, seed, bias = params
    f = gen_random(kind, n, seed, bias)
    kinds = classify(f)
    assert len(kinds) == n
    assert f.leaves(), "every non-empty forest has a leaf"
    comps = f.components()
    assert sorted(v for c in comps for v in c) == list(range(n))
    if kind == "undirected":
        assert len(f.edges) == n - len(comps)
        for v in range(n):
            assert all(v in f.adj[w] for w in f.adj[v])
    else:
        assert len(f.roots()) == n - sum(p is not None for p in f.parent)
        for v in range(n):
            assert all(f.parent[c] == v for c in f.children[v])
            assert list(f.children[v]) == sorted(f.children[v])
            steps, x = 0, v
            while f.parent[x] is not None:
                x, steps = f.parent[x], steps + 1
            assert steps < n


@settings(max_examples=100, deadline=None)
@given(forest_params)
def test_json_round_trip(params):
    kind, n, seed, bias = params
    f = gen_random(kind, n, seed, bias)
    assert forest_from_dict(forest_to_dict(f)) == f


def test_dot_shapes():
    dot = to_dot(star(3))
    assert dot.startswith("graph") and "0 [shape=diamond]" in dot and "1 [shape=box]" in dot
    assert "0 -- 1" in dot
    ddot = to_dot(directed_path(2))
    assert ddot.startswith("digraph") and "0 -> 1" in ddot
