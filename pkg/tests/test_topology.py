import itertools

import pytest
from hypothesis import given, strategies as st

from bhdpc import topology as tp
from bhdpc.errors import BadDimension, NotAdjacent, ParseError


def nodes_st(n):
    return st.tuples(*[st.integers(0, 3)] * n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_vertex_count(n):
    assert len(list(tp.all_nodes(n))) == 4 ** n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_regularity_and_simple(n):
    for u in tp.all_nodes(n):
        nbrs = tp.neighbors(u)
        assert len(nbrs) == 2 * n
        assert len(set(nbrs)) == 2 * n
        assert u not in nbrs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bipartite_balanced(n):
    whites = [u for u in tp.all_nodes(n) if tp.is_white(u)]
    blacks = [u for u in tp.all_nodes(n) if tp.is_black(u)]
    assert len(whites) == len(blacks) == 4 ** n // 2
    for u in whites:
        assert all(tp.is_black(v) for v in tp.neighbors(u))


@given(nodes_st(3))
def test_adjacency_symmetric(u):
    for v in tp.neighbors(u):
        assert u in tp.neighbors(v)


@given(nodes_st(2))
def test_symmetric_node_shares_neighborhood(u):
    # the two vertices differing only by 2 in coordinate 0 have the same
    # neighbor set; this is the defining symmetry of the graph family
    w = tp.symmetric_node(u)
    assert w != u
    assert tp.neighbor_set(u) == tp.neighbor_set(w)
    assert tp.symmetric_node(w) == u


@given(nodes_st(3))
def test_parse_format_roundtrip(u):
    assert tp.parse_node(tp.format_node(u)) == u


@pytest.mark.parametrize("bad", ["", "()", "(1,4)", "(a,0)", "(1 2)"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        tp.parse_node(bad)


def test_edge_dimension():
    assert tp.edge_dimension((0, 0), (1, 0)) == 0
    assert tp.edge_dimension((0, 0), (1, 1)) == 1
    with pytest.raises(NotAdjacent):
        tp.edge_dimension((0, 0), (2, 0))


@pytest.mark.parametrize("n,l", [(2, 1), (3, 1), (3, 2)])
def test_partition_four_isomorphic_cubes(n, l):
    pt = tp.partition_along(l, n)
    for c in range(4):
        cube = [u for u in tp.all_nodes(n) if pt.cube_of(u) == c]
        assert len(cube) == 4 ** (n - 1)
        locals_ = {pt.to_local(u) for u in cube}
        assert locals_ == set(tp.all_nodes(n - 1))
        # intra-cube adjacency matches the smaller graph
        for u in cube:
            down = {
                pt.to_local(v)
                for v in tp.neighbors(u)
                if pt.cube_of(v) == c
            }
            assert down == tp.neighbor_set(pt.to_local(u))


def test_partition_crossing_direction():
    pt = tp.partition_along(1, 2)
    for u in tp.all_nodes(2):
        a, b = pt.crossing_neighbors(u)
        assert b == tp.symmetric_node(a)
        step = 1 if tp.is_white(u) else -1
        assert pt.cube_of(a) == (pt.cube_of(u) + step) % 4


def test_partition_rejects_dim0():
    with pytest.raises(BadDimension):
        tp.partition_along(0, 2)


def test_deleting_crossing_edges_disconnects_into_four():
    n, l = 2, 1
    pt = tp.partition_along(l, n)
    # union-find over intra edges only
    parent = {u: u for u in tp.all_nodes(n)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in tp.all_nodes(n):
        for v in tp.neighbors(u):
            if tp.edge_dimension(u, v) != l:
                parent[find(u)] = find(v)
    comps = {find(u) for u in tp.all_nodes(n)}
    assert len(comps) == 4
