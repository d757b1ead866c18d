import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from cutideals.cuts import (VertexPartition, claw_cycle_rename, complement, cut_exponent_matrix, cut_set,
                            enumerate_partitions, format_matrix, parse_matrix, phylo_exponent_matrix,
                            transported_cycle_matrix)
from cutideals.errors import BudgetExceeded, InputError
from cutideals.graph import Graph, cycle_graph, path_graph

from test_graph import graphs, to_nx


def test_partition_labels_for_a_path():
    labels = [p.label for p in enumerate_partitions(path_graph(2))]
    assert labels == ["q[00]", "q[01]", "q[10]", "q[11]"]


def test_from_sides_canonicalizes():
    p = VertexPartition.from_sides([1, 3], 4)
    assert p.side_b == (2, 4) and p.side_a == (1, 3)
    assert VertexPartition.from_sides([2, 4], 4) == p


def test_vertex_one_must_be_on_side_a():
    with pytest.raises(ValueError):
        VertexPartition(1, 3)
    with pytest.raises(ValueError):
        VertexPartition(1 << 3, 3)


def test_partition_count_limit():
    with pytest.raises(BudgetExceeded):
        enumerate_partitions(17)


@given(graphs(max_vertices=7))
def test_partitions_are_canonical_and_complete(g):
    parts = enumerate_partitions(g)
    assert len(parts) == 2 ** (g.vertex_count - 1)
    assert len(set(parts)) == len(parts)
    full = (1 << g.vertex_count) - 1
    seen = {p.side_mask for p in parts} | {complement(p) for p in parts}
    assert seen == set(range(full + 1))


@given(graphs(max_vertices=7))
def test_cut_sets_match_edge_boundary(g):
    h = to_nx(g)
    index = {e: k + 1 for k, e in enumerate(g.edges)}
    for p in enumerate_partitions(g):
        boundary = nx.edge_boundary(h, p.side_a, p.side_b) if p.side_b else []
        expected = sorted(index[tuple(sorted(e))] for e in boundary)
        assert list(cut_set(p, g).edges()) == expected
        assert cut_set(p, g) == cut_set(complement(p), g)


def test_four_cycle_matrix():
    m = cut_exponent_matrix(cycle_graph(4))
    assert m.shape == (8, 8)
    assert m.rows[:2] == ("s[1,2]", "t[1,2]")
    assert m.rank() == 5


@given(graphs(max_vertices=6))
def test_matrix_columns_are_homogeneous(g):
    m = cut_exponent_matrix(g)
    assert m.shape == (2 * g.edge_count, 2 ** (g.vertex_count - 1))
    assert set(m.column_degrees()) <= {g.edge_count}
    a = m.array()
    if g.edge_count:
        assert np.array_equal(a[0::2] + a[1::2], np.ones((g.edge_count, a.shape[1]), dtype=np.int64))


@given(graphs(max_vertices=6))
def test_connected_graphs_have_distinct_columns(g):
    m = cut_exponent_matrix(g)
    distinct = len(set(m.column_vectors()))
    assert (distinct == len(m.columns)) == nx.is_connected(to_nx(g))
    assert m.distinct_columns().shape == (m.shape[0], distinct)


def test_image_of_a_monomial():
    m = cut_exponent_matrix(path_graph(1))
    assert m.image((2, 1)) == (1, 2)


# -- claw tree ------------------------------------------------------------------

def test_claw_matrix_shape():
    m = phylo_exponent_matrix(3)
    assert m.shape == (8, 8)
    assert m.columns[0] == "q_000" and m.rows[:2] == ("a0(1)", "a1(1)")
    assert all(d == 4 for d in m.column_degrees())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_claw_matrix_equals_transported_cycle(n):
    assert transported_cycle_matrix(n) == phylo_exponent_matrix(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rename_is_a_bijection_preserving_cuts(n):
    rename = claw_cycle_rename(n)
    assert len(set(rename.values())) == 2**n
    c = cycle_graph(n + 1)
    for g, p in rename.items():
        cut = set(cut_set(p, c).edges())
        for i, gi in enumerate(g, start=1):
            # edge i of the cycle is {i, i+1}
            assert (i in cut) == bool(gi)
        closing = c.edges.index((1, n + 1)) + 1
        assert (closing in cut) == bool(sum(g) % 2)


def test_claw_limits():
    with pytest.raises(BudgetExceeded):
        phylo_exponent_matrix(6)
    with pytest.raises(BudgetExceeded):
        claw_cycle_rename(1)


# -- interchange format ------------------------------------------------------------

@given(graphs(max_vertices=5))
def test_matrix_roundtrip(g):
    m = cut_exponent_matrix(g)
    assert parse_matrix(format_matrix(m)) == m


@pytest.mark.parametrize("text", [
    "",
    "rows 1\n",
    "rows 1 cols 2\n1 x\nr\na b\n",
    "rows 1 cols 2\n1 0 1\nr\na b\n",
    "rows 1 cols 2\n1 0\nr s\na b\n",
    "rows 1 cols 1\n-1\nr\na\n",
    "rows 2 cols 1\n1\n",
])
def test_bad_matrix_files(text):
    with pytest.raises(InputError):
        parse_matrix(text)


def test_mismatched_entries_rejected():
    from cutideals.cuts import ExponentMatrix
    with pytest.raises(ValueError):
        ExponentMatrix(("r",), ("a", "b"), ((1,),))


def test_edge_limit():
    g = Graph(9, tuple(itertools.combinations(range(1, 10), 2)))
    with pytest.raises(BudgetExceeded):
        cut_exponent_matrix(g)
