import pytest
from hypothesis import given, strategies as st

from conftest import labeled_graphs
from domcount import (
    GraphBuilder,
    InfeasibleOrderError,
    InvalidEdgeError,
    SizeLimitError,
    VertexSet,
    complete_graph,
    disjoint_union,
    domination_number,
    from_edges,
    new_graph,
)


def cycle(n):
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


class TestConstruction:
    def test_new_graph_empty(self):
        g = new_graph(0)
        assert g.n == 0 and g.m == 0

    def test_new_graph_isolated(self):
        g = new_graph(3)
        assert g.rows == (0, 0, 0)
        assert new_graph(5).m == 0

    def test_add_edge(self):
        g = GraphBuilder(2).add_edge(0, 1).build()
        assert g.m == 1 and g.has_edge(0, 1) and g.has_edge(1, 0)

    def test_add_edge_idempotent(self):
        b = GraphBuilder(3)
        b.add_edge(0, 1)
        b.add_edge(1, 0)
        assert b.build().m == 1

    def test_add_edge_rejects_loop(self):
        with pytest.raises(InvalidEdgeError):
            GraphBuilder(4).add_edge(2, 2)

    def test_add_edge_rejects_out_of_range(self):
        with pytest.raises(InvalidEdgeError):
            GraphBuilder(3).add_edge(0, 3)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            new_graph(-1)

    def test_vertex_cap(self):
        with pytest.raises(SizeLimitError):
            new_graph(4097)

    def test_complete_graph(self):
        assert complete_graph(1).n == 1
        assert complete_graph(4).m == 6
        assert domination_number(complete_graph(7)) == 1

    def test_complete_graph_rejects_zero(self):
        with pytest.raises(InfeasibleOrderError):
            complete_graph(0)


class TestNeighborhoods:
    def test_closed_neighborhood_triangle(self):
        assert complete_graph(3).closed_neighborhood(0).vertices() == (0, 1, 2)

    def test_closed_neighborhood_edgeless(self):
        assert new_graph(3).closed_neighborhood(0).vertices() == (0,)

    def test_closed_neighborhood_cycle(self):
        assert cycle(4).closed_neighborhood(0).vertices() == (0, 1, 3)

    def test_out_of_range_vertex(self):
        with pytest.raises(InvalidEdgeError):
            new_graph(2).closed_neighborhood(2)

    @given(labeled_graphs(max_n=8))
    def test_closed_neighborhood_contains_vertex(self, g):
        for v in range(g.n):
            closed = g.closed_neighborhood(v)
            assert v in closed
            assert closed.size == g.degree(v) + 1


class TestDisjointUnion:
    def test_two_edges(self):
        k2 = complete_graph(2)
        g = disjoint_union(k2, k2)
        assert g.n == 4 and g.m == 2
        assert list(g.edges()) == [(0, 1), (2, 3)]

    def test_identity(self):
        g = cycle(5)
        assert disjoint_union(g, new_graph(0)).rows == g.rows

    def test_edge_counts_add(self):
        g = disjoint_union(complete_graph(3), cycle(4))
        assert g.n == 7 and g.m == 7

    @given(labeled_graphs(max_n=5), labeled_graphs(max_n=5), labeled_graphs(max_n=5))
    def test_associative_up_to_relabeling(self, a, b, c):
        left = disjoint_union(disjoint_union(a, b), c)
        right = disjoint_union(a, disjoint_union(b, c))
        assert left.n == right.n and left.m == right.m
        assert left.degree_multiset() == right.degree_multiset()
        # the vertex offsets compose identically, so this is actual equality
        assert left.rows == right.rows


class TestInvariants:
    @given(st.integers(min_value=1, max_value=9), st.data())
    def test_random_insertions_keep_invariants(self, n, data):
        pairs = st.tuples(
            st.integers(0, n - 1), st.integers(0, n - 1)
        ).filter(lambda p: p[0] != p[1])
        edges = data.draw(st.lists(pairs, max_size=20))
        g = from_edges(n, edges)
        g.check_invariants()
        assert all(not g.rows[v] >> v & 1 for v in range(g.n))
        assert sum(row.bit_count() for row in g.rows) == 2 * g.m

    @given(labeled_graphs(max_n=8))
    def test_symmetry(self, g):
        g.check_invariants()

    def test_relabeled_preserves_shape(self):
        g = cycle(5)
        h = g.relabeled([4, 3, 2, 1, 0])
        assert h.m == g.m and h.degree_multiset() == g.degree_multiset()


class TestVertexSet:
    def test_from_vertices(self):
        s = VertexSet.from_vertices(5, [3, 0])
        assert s.mask == 0b01001 and s.size == 2 and s.vertices() == (0, 3)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            VertexSet.from_vertices(3, [3])
        with pytest.raises(ValueError):
            VertexSet(3, 0b1000)

    def test_membership(self):
        s = VertexSet(4, 0b1010)
        assert 1 in s and 3 in s and 0 not in s
        assert list(s) == [1, 3]
