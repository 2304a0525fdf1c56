"""Unit tests for family specifications, generators and enumeration."""
import random

import pytest

from src.main.python.interfaces.errors import FamilySpecError, GraphUsageError, SizeLimitError
from src.main.python.models.domain_models import FamilyKind, FamilySpec
from src.main.python.parsers.family_parser import FamilySpecSource, parse_family_spec
from src.main.python.services.families import (
    enumerate_all_graphs,
    enumerate_graph_classes,
    generate,
    isomorphism_classes,
    petersen_vertex,
    random_graph,
)
from tests.conftest import family


class TestFamilySpecParser:
    """Unit tests for parsing family specifications."""

    def test_simple_specs(self):
        assert parse_family_spec("path:10") == FamilySpec(FamilyKind.PATH, (10,))
        assert parse_family_spec(" Petersen ") == FamilySpec(FamilyKind.PETERSEN)
        assert parse_family_spec("kbip:2:3").params == (2, 3)

    def test_complement_nests(self):
        spec = parse_family_spec("complement:path:8")
        assert spec.kind == FamilyKind.COMPLEMENT
        assert spec.inner == FamilySpec(FamilyKind.PATH, (8,))
        assert spec.to_text() == "complement:path:8"

    @pytest.mark.parametrize("text", [
        "", "foo", "path", "path:x", "path:0", "cycle:2", "kbip-minus:1:2", "petersen:3", "complement",
    ])
    def test_invalid_specs(self, text):
        with pytest.raises(FamilySpecError):
            parse_family_spec(text)

    def test_oversized_family(self):
        with pytest.raises(SizeLimitError):
            parse_family_spec("path:5000")

    def test_source_loads_named_graph(self):
        source = FamilySpecSource()
        assert source.supports("cycle:6")
        assert not source.supports("nosuchfamily:3")
        [named] = source.load("cycle:6")
        assert named.name == "cycle:6"
        assert named.graph.edge_count == 6


class TestGenerators:
    """Unit tests for the named graph families."""

    def test_petersen(self, petersen):
        assert petersen.n == 10
        assert petersen.edge_count == 15
        assert all(petersen.degree(v) == 3 for v in range(10))
        assert petersen.diameter() == 2

    def test_petersen_labels(self, petersen):
        assert petersen_vertex("x1") == 0
        assert petersen_vertex("y5") == 9
        assert petersen.has_edge(petersen_vertex("x1"), petersen_vertex("y1"))
        with pytest.raises(GraphUsageError):
            petersen_vertex("z1")

    @pytest.mark.parametrize("spec, n, edges", [
        ("path:5", 5, 4),
        ("cycle:7", 7, 7),
        ("complete:5", 5, 10),
        ("star:4", 5, 4),
        ("kbip:2:3", 5, 6),
        ("kbip-minus:2:3", 5, 5),
        ("cube", 8, 12),
        ("cube-minus", 7, 9),
        ("kminusm:3", 6, 12),
        ("complement:path:4", 4, 3),
    ])
    def test_sizes(self, spec, n, edges):
        graph = family(spec)
        assert (graph.n, graph.edge_count) == (n, edges)

    def test_star_centre_is_universal(self):
        assert family("star:4").has_universal_vertex() == 0

    def test_complement_family(self):
        assert generate(parse_family_spec("complement:cycle:5")) == family("cycle:5").complement()


class TestEnumeration:
    """Unit tests for exhaustive and random graph generation."""

    def test_labelled_counts(self):
        assert sum(1 for _ in enumerate_all_graphs(3)) == 8
        assert sum(1 for _ in enumerate_all_graphs(4)) == 64
        assert sum(1 for _ in enumerate_all_graphs(4, connected=True)) == 38

    def test_isomorphism_classes(self):
        assert len(isomorphism_classes(enumerate_all_graphs(3))) == 4
        assert len(isomorphism_classes(enumerate_all_graphs(4))) == 11
        assert len(isomorphism_classes(enumerate_all_graphs(4, connected=True))) == 6

    @pytest.mark.parametrize("n, total, connected", [
        (1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6), (5, 34, 21), (6, 156, 112),
    ])
    def test_class_counts(self, n, total, connected):
        assert len(enumerate_graph_classes(n)) == total
        assert len(enumerate_graph_classes(n, connected=True)) == connected

    def test_classes_match_labelled_enumeration(self):
        labelled = isomorphism_classes(enumerate_all_graphs(4))
        classes = enumerate_graph_classes(4)
        assert sorted(g.edge_count for g in labelled) == sorted(g.edge_count for g in classes)

    def test_enumeration_guards(self):
        with pytest.raises(GraphUsageError):
            list(enumerate_all_graphs(0))
        with pytest.raises(SizeLimitError):
            list(enumerate_all_graphs(8))
        with pytest.raises(SizeLimitError):
            enumerate_graph_classes(8)

    def test_random_graph_is_seeded(self):
        first = [random_graph(6, random.Random(5)) for _ in range(3)]
        second = [random_graph(6, random.Random(5)) for _ in range(3)]
        assert first == second

    def test_random_connected_graph(self, rng):
        for _ in range(20):
            assert random_graph(5, rng, connected=True).is_connected()
