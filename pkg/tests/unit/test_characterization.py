"""Unit tests for the small-value characterization of product domination."""
import pytest

from src.main.python.config.search_config import (
    CLAUSE_DOM3_I,
    CLAUSE_DOM3_II,
    CLAUSE_DOM3_IV,
    CLAUSE_GE4,
    CLAUSE_ONE,
    CLAUSE_TWO_I,
    CLAUSE_TWO_II,
)
from src.main.python.interfaces.errors import GraphUsageError, SizeLimitError
from src.main.python.models.domain_models import IndexSubset, ProductClass, ProductVertex
from src.main.python.services.characterization import A_set, CharacterizationCalculator, a_indicator
from src.main.python.services.domination import is_product_dominating
from src.main.python.services.families import random_graph
from tests.conftest import family


class TestIndexSets:
    """Unit tests for A_G(I, D)."""

    def test_a_set_on_a_path(self):
        p3 = family("path:3")
        assert A_set(p3, (0, 2), IndexSubset.of(2, [1])).to_list() == [0]
        assert A_set(p3, (0, 2), IndexSubset.of(2, [2])).to_list() == [2]
        assert A_set(p3, (0, 2), IndexSubset.of(2, [1, 2])).to_list() == [1]
        assert A_set(p3, (0, 2), IndexSubset.of(2, [])).to_list() == []
        assert a_indicator(p3, (0, 2), IndexSubset.of(2, [])) == 0
        assert a_indicator(p3, (0, 2), IndexSubset.of(2, [1, 2])) == 1

    def test_a_sets_partition_the_vertices(self, petersen):
        D = (0, 6, 8)
        parts = [A_set(petersen, D, IndexSubset.from_mask(3, mask)) for mask in range(8)]
        assert sum(len(p) for p in parts) == petersen.n

    def test_a_set_rejects_bad_input(self, p4):
        with pytest.raises(GraphUsageError):
            A_set(p4, (0, 1), IndexSubset.of(3, [1]))
        with pytest.raises(GraphUsageError):
            A_set(p4, (0, 9), IndexSubset.of(2, [1]))
        with pytest.raises(GraphUsageError):
            IndexSubset.of(2, [3])


class TestCharacterizationCalculator:
    """Unit tests for CharacterizationCalculator."""

    @pytest.fixture
    def characterization(self, domination):
        return CharacterizationCalculator(domination)

    def test_equals_one(self, characterization, k3, p4):
        verdict = characterization.classify(k3, family("star:2"))
        assert (verdict.product_class, verdict.clause) == (ProductClass.EQ1, CLAUSE_ONE)
        assert verdict.cross_checked and verdict.exact_value == 1
        assert not characterization.equals_one(k3, p4)

    def test_equals_two_by_factor_values(self, characterization, k3, p4):
        assert characterization.equals_two(k3, p4) == CLAUSE_TWO_I
        verdict = characterization.classify(k3, p4)
        assert verdict.product_class == ProductClass.EQ2
        assert verdict.exact_value == 2

    def test_equals_two_by_ecd_pair(self, characterization, p4):
        assert characterization.equals_two(p4, p4) == CLAUSE_TWO_II
        verdict = characterization.classify(p4, p4)
        assert verdict.clause == CLAUSE_TWO_II
        assert verdict.witness == {"g": [0, 3]}

    def test_c4_squared(self, characterization, c4):
        assert characterization.at_least_three(c4, c4)
        assert characterization.equals_three(c4, c4) == CLAUSE_DOM3_I
        assert CLAUSE_DOM3_II not in characterization.satisfied_three_clauses(c4, c4)
        verdict = characterization.classify(c4, c4)
        assert verdict.product_class == ProductClass.EQ3
        assert verdict.exact_value == 3

    def test_three_characterization_needs_its_hypothesis(self, characterization, k3, p4):
        with pytest.raises(GraphUsageError):
            characterization.equals_three(k3, k3)
        with pytest.raises(GraphUsageError):
            characterization.satisfied_three_clauses(p4, p4)

    def test_sdctd_three_clause(self, characterization):
        c5 = family("cycle:5")
        assert characterization.equals_three(c5, family("cycle:7")) == CLAUSE_DOM3_II

    def test_petersen_squared_by_triples(self, characterization, petersen):
        assert characterization.equals_three(petersen, petersen) == CLAUSE_DOM3_IV
        verdict = characterization.classify(petersen, petersen, cross_check=False)
        assert verdict.product_class == ProductClass.EQ3
        diagonal = [ProductVertex(g, h) for g, h in zip(verdict.witness["g"], verdict.witness["h"])]
        assert is_product_dominating(petersen, petersen, diagonal)

    def test_triples_have_distinct_vertices(self, characterization, petersen):
        g_triple, h_triple = characterization.dom3_iv_witness(petersen, petersen)
        assert len(set(g_triple)) == 3 and len(set(h_triple)) == 3
        assert characterization.dom3_iv_witness(family("path:2"), petersen) is None

    def test_path_times_petersen_is_at_least_four(self, characterization, petersen):
        verdict = characterization.classify(family("path:10"), petersen, cross_check=False)
        assert (verdict.product_class, verdict.clause) == (ProductClass.GE4, CLAUSE_GE4)

    def test_at_least_four_records_the_exact_value(self, characterization):
        # K1⋄H is H, so the product is edgeless on five vertices
        verdict = characterization.classify(family("complete:1"), family("complement:complete:5"))
        assert (verdict.product_class, verdict.clause) == (ProductClass.GE4, CLAUSE_GE4)
        assert verdict.cross_checked
        assert verdict.exact_value == 5

    def test_triple_search_size_guard(self, characterization):
        with pytest.raises(SizeLimitError):
            characterization.dom3_iv_witness(family("path:65"), family("path:3"))

    def test_agrees_with_exact_solver(self, characterization, rng):
        for _ in range(40):
            G, H = random_graph(rng.randint(1, 4), rng), random_graph(rng.randint(1, 4), rng)
            verdict = characterization.classify(G, H)
            assert verdict.cross_checked
            assert verdict.product_class == ProductClass.truncate(verdict.exact_value)

    def test_mirror_symmetry(self, characterization, rng):
        for _ in range(20):
            G, H = random_graph(rng.randint(1, 5), rng), random_graph(rng.randint(1, 5), rng)
            left = characterization.classify(G, H, cross_check=False).product_class
            right = characterization.classify(H, G, cross_check=False).product_class
            assert left == right
