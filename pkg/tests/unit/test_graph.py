"""Unit tests for the graph model."""
import pytest

from src.main.python.interfaces.errors import GraphUsageError, SizeLimitError
from src.main.python.models.graph import INFINITY, ExtendedNat, Graph, VertexSet
from tests.conftest import family


class TestExtendedNat:
    """Unit tests for naturals extended with infinity."""

    def test_ordering_puts_infinity_last(self):
        assert ExtendedNat(3) < ExtendedNat(4)
        assert ExtendedNat(10 ** 6) < INFINITY
        assert not INFINITY < INFINITY
        assert INFINITY >= 3
        assert ExtendedNat(2) == 2

    def test_addition_absorbs_infinity(self):
        assert ExtendedNat(2) + 3 == 5
        assert 3 + ExtendedNat(2) == 5
        assert ExtendedNat(2) + INFINITY == INFINITY

    def test_int_conversion(self):
        assert int(ExtendedNat(7)) == 7
        with pytest.raises(GraphUsageError):
            int(INFINITY)

    def test_negative_values_rejected(self):
        with pytest.raises(GraphUsageError):
            ExtendedNat(-1)

    def test_json_form(self):
        assert ExtendedNat(4).to_json() == 4
        assert INFINITY.to_json() == "inf"
        assert str(INFINITY) == "inf"


class TestVertexSet:
    """Unit tests for bitmask vertex sets."""

    def test_from_vertices_and_iteration(self):
        s = VertexSet.from_vertices(6, [4, 1, 1])
        assert s.to_list() == [1, 4]
        assert len(s) == 2
        assert 4 in s and 0 not in s and 9 not in s

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphUsageError):
            VertexSet.from_vertices(3, [3])
        with pytest.raises(GraphUsageError):
            VertexSet(0b1000, 3)

    def test_set_algebra(self):
        a = VertexSet.from_vertices(5, [0, 1, 2])
        b = VertexSet.from_vertices(5, [2, 3])
        assert (a | b).to_list() == [0, 1, 2, 3]
        assert (a & b).to_list() == [2]
        assert (a - b).to_list() == [0, 1]
        assert a.complement().to_list() == [3, 4]
        assert (a & b).issubset(a)

    def test_mismatched_universes_rejected(self):
        with pytest.raises(GraphUsageError):
            VertexSet.from_vertices(3, [0]) | VertexSet.from_vertices(4, [0])


class TestGraph:
    """Unit tests for the Graph model."""

    def test_from_edges_merges_duplicates(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edge_count == 2
        assert list(g.edges()) == [(0, 1), (1, 2)]
        assert g.degree(1) == 2
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 2)

    def test_invalid_graphs_rejected(self):
        with pytest.raises(GraphUsageError):
            Graph.from_edges(0, [])
        with pytest.raises(GraphUsageError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(GraphUsageError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(GraphUsageError):
            Graph(2, (0b10, 0))
        with pytest.raises(GraphUsageError):
            Graph(2, (0b1, 0b0))

    def test_vertex_limit(self):
        with pytest.raises(SizeLimitError):
            Graph.empty(4097)

    def test_neighbourhoods_of_c4(self, c4):
        assert c4.open_neighborhood(0).to_list() == [1, 3]
        assert c4.closed_neighborhood(0).to_list() == [0, 1, 3]
        with pytest.raises(GraphUsageError):
            c4.open_neighborhood(4)

    def test_complement_is_an_involution(self, petersen):
        assert petersen.complement().complement() == petersen
        assert petersen.complement().edge_count == 45 - 15

    def test_complement_of_c4_is_a_matching(self, c4):
        assert list(c4.complement().edges()) == [(0, 2), (1, 3)]

    def test_distances_and_diameter(self, p4, petersen):
        assert p4.distance(0, 3) == 3
        assert p4.diameter() == 3
        assert petersen.diameter() == 2
        assert Graph.empty(1).diameter() == 0
        assert family("complete:4").diameter() == 1

    def test_disconnected_graph_has_infinite_diameter(self):
        g = Graph.empty(2)
        assert g.diameter() == INFINITY
        assert g.distance(0, 1) == INFINITY
        assert not g.is_connected()

    def test_universal_vertex(self, p4):
        assert family("star:3").has_universal_vertex() == 0
        assert p4.has_universal_vertex() is None
        assert Graph.empty(1).has_universal_vertex() == 0

    def test_private_neighbors(self):
        p3 = family("path:3")
        assert p3.private_neighbors(1, VertexSet.from_vertices(3, [1])).to_list() == [0, 1, 2]
        assert p3.private_neighbors(0, VertexSet.from_vertices(3, [0, 2])).to_list() == [0]
        with pytest.raises(GraphUsageError):
            p3.private_neighbors(1, VertexSet.from_vertices(3, [0]))

    def test_induced_subgraph_relabels(self, petersen):
        outer = petersen.induced_subgraph([0, 1, 2, 3, 4])
        assert outer == family("cycle:5")
        assert petersen.induced_subgraph([4, 0]).edge_count == 1
