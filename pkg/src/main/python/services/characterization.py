"""Decision procedures for small values of the product domination number.

``A_G(I, D)`` is read index-wise: for an ordered ``D = (d_1, ..., d_q)``,
vertex ``g`` belongs to ``A_G(I, D)`` iff ``d_i in N[g]`` exactly for the
indices ``i in I``. For ``D`` without repeated vertices this is the same as
``N[g] ∩ D = {d_i : i in I}``.
"""
import logging
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.search_config import (
    CHARACTERIZATION_CAP,
    CLAUSE_DOM3_I,
    CLAUSE_DOM3_II,
    CLAUSE_DOM3_III,
    CLAUSE_DOM3_IV,
    CLAUSE_GE4,
    CLAUSE_ONE,
    CLAUSE_TWO_I,
    CLAUSE_TWO_II,
    MAX_PRODUCT_VERTICES,
    MAX_TRIPLE_SEARCH_VERTICES,
)
from ..interfaces.errors import GraphUsageError, SizeLimitError, VerificationError
from ..models.domain_models import (
    CharacterizationVerdict,
    IndexSubset,
    ProductClass,
    ProductVertex,
    SolveStatus,
)
from ..models.graph import Graph, VertexSet
from .domination import DominationCalculator, dominating_via_index_sets

_TRIPLE = 3
_ALL_INDICES = (1 << _TRIPLE) - 1


def _pattern(graph: Graph, g: int, D: Sequence[int]) -> int:
    row = graph.closed_rows[g]
    pattern = 0
    for i, d in enumerate(D):
        if row >> d & 1:
            pattern |= 1 << i
    return pattern


def A_set(G: Graph, D: Sequence[int], I: IndexSubset) -> VertexSet:
    """Vertices whose closed neighbourhood meets ``D`` in exactly the ``I``-indexed entries."""
    if len(D) != I.q:
        raise GraphUsageError(f"index subset over 1..{I.q} does not match |D| = {len(D)}")
    for d in D:
        if not 0 <= d < G.n:
            raise GraphUsageError(f"vertex {d} out of range for n={G.n}")
    target = I.mask
    return VertexSet.from_vertices(G.n, [g for g in range(G.n) if _pattern(G, g, D) == target])


def a_indicator(G: Graph, D: Sequence[int], I: IndexSubset) -> int:
    return 1 if len(A_set(G, D, I)) else 0


def _pattern_mask(graph: Graph, D: Sequence[int]) -> int:
    """Bit ``p`` is set iff some vertex has index pattern ``p`` against ``D``."""
    mask = 0
    for g in range(graph.n):
        mask |= 1 << _pattern(graph, g, D)
    return mask


def _complemented(mask: int) -> int:
    """Bit ``I`` set iff bit ``I^c`` is set in ``mask``."""
    result = 0
    for p in range(1 << _TRIPLE):
        if mask >> (_ALL_INDICES ^ p) & 1:
            result |= 1 << p
    return result


class CharacterizationCalculator:
    """Classifies ``gamma(G⋄H)`` as 1, 2, 3 or at least 4."""

    def __init__(self, domination: Optional[DominationCalculator] = None):
        """
        Initialize the characterization calculator.

        Args:
            domination: Solver for factor invariants and the cross-check
        """
        self.domination = domination or DominationCalculator()
        self.logger = logging.getLogger(__name__)

    def _gamma(self, graph: Graph) -> int:
        return int(self.domination.domination_number(graph).value)

    def equals_one(self, G: Graph, H: Graph) -> bool:
        return G.has_universal_vertex() is not None and H.has_universal_vertex() is not None

    def _ecd_pair(self, G: Graph, H: Graph) -> Optional[Tuple[str, VertexSet]]:
        for name, graph in (("g", G), ("h", H)):
            found = self.domination.find_ecd_set_of_size(graph, 2)
            if found is not None:
                return name, found
        return None

    def equals_two(self, G: Graph, H: Graph) -> Optional[str]:
        if self.equals_one(G, H):
            return None
        if self._gamma(G) + self._gamma(H) == 3:
            return CLAUSE_TWO_I
        if self._ecd_pair(G, H) is not None:
            return CLAUSE_TWO_II
        return None

    def at_least_three(self, G: Graph, H: Graph) -> bool:
        return self._gamma(G) + self._gamma(H) >= 4 and self._ecd_pair(G, H) is None

    def dom3_iv_witness(self, G: Graph, H: Graph) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Lexicographically first ordered triples of distinct vertices meeting the indicator inequality.

        The inequality holds for every ``I`` exactly when no ``g``-pattern is
        the complement of an ``h``-pattern, i.e. when the diagonal set
        ``{(g_i, h_i)}`` dominates the product.
        """
        largest = max(G.n, H.n)
        if largest > MAX_TRIPLE_SEARCH_VERTICES:
            raise SizeLimitError("triple search vertex count", MAX_TRIPLE_SEARCH_VERTICES, largest)
        g_first: Dict[int, Tuple[int, ...]] = {}
        for triple in permutations(range(G.n), _TRIPLE):
            g_first.setdefault(_pattern_mask(G, triple), triple)
        h_first: Dict[int, Tuple[int, ...]] = {}
        for triple in permutations(range(H.n), _TRIPLE):
            h_first.setdefault(_complemented(_pattern_mask(H, triple)), triple)

        for g_mask, g_triple in sorted(g_first.items(), key=lambda item: item[1]):
            compatible = [t for mask, t in h_first.items() if mask & g_mask == 0]
            if compatible:
                return g_triple, min(compatible)
        return None

    def satisfied_three_clauses(self, G: Graph, H: Graph) -> List[str]:
        """Every clause of the three-characterization that holds, in reporting order."""
        if not self.at_least_three(G, H):
            raise GraphUsageError("the three-characterization needs gamma(G⋄H) >= 3")
        clauses = []
        if self._gamma(G) + self._gamma(H) == 4:
            clauses.append(CLAUSE_DOM3_I)
        if self.domination.sdctd_number(G).value == 3 or self.domination.sdctd_number(H).value == 3:
            clauses.append(CLAUSE_DOM3_II)
        if G.diameter() >= 3 and H.diameter() >= 3:
            clauses.append(CLAUSE_DOM3_III)
        if self.dom3_iv_witness(G, H) is not None:
            clauses.append(CLAUSE_DOM3_IV)
        return clauses

    def equals_three(self, G: Graph, H: Graph) -> Optional[str]:
        """First satisfied clause; later clauses are only evaluated when needed."""
        if not self.at_least_three(G, H):
            raise GraphUsageError("the three-characterization needs gamma(G⋄H) >= 3")
        if self._gamma(G) + self._gamma(H) == 4:
            return CLAUSE_DOM3_I
        if self.domination.sdctd_number(G).value == 3 or self.domination.sdctd_number(H).value == 3:
            return CLAUSE_DOM3_II
        if G.diameter() >= 3 and H.diameter() >= 3:
            return CLAUSE_DOM3_III
        if self.dom3_iv_witness(G, H) is not None:
            return CLAUSE_DOM3_IV
        return None

    def _decide(self, G: Graph, H: Graph) -> CharacterizationVerdict:
        if self.equals_one(G, H):
            return CharacterizationVerdict(ProductClass.EQ1, CLAUSE_ONE, {
                "g": [G.has_universal_vertex()], "h": [H.has_universal_vertex()],
            })
        two = self.equals_two(G, H)
        if two == CLAUSE_TWO_I:
            return CharacterizationVerdict(ProductClass.EQ2, two, {
                "g": self.domination.domination_number(G).witness.to_list(),
                "h": self.domination.domination_number(H).witness.to_list(),
            })
        if two == CLAUSE_TWO_II:
            side, ecd = self._ecd_pair(G, H)
            return CharacterizationVerdict(ProductClass.EQ2, two, {side: ecd.to_list()})
        three = self.equals_three(G, H)
        if three is None:
            return CharacterizationVerdict(ProductClass.GE4, CLAUSE_GE4)
        witness = {}
        if three == CLAUSE_DOM3_IV:
            g_triple, h_triple = self.dom3_iv_witness(G, H)
            diagonal = [ProductVertex(g, h) for g, h in zip(g_triple, h_triple)]
            if not dominating_via_index_sets(G, H, diagonal):
                raise VerificationError(CLAUSE_DOM3_IV, "diagonal set of the triples does not dominate", {
                    "g": list(g_triple), "h": list(h_triple),
                })
            witness = {"g": list(g_triple), "h": list(h_triple)}
        return CharacterizationVerdict(ProductClass.EQ3, three, witness)

    def classify(self, G: Graph, H: Graph, cross_check: bool = True) -> CharacterizationVerdict:
        """
        Classify the product domination number.

        Args:
            G: First factor
            H: Second factor
            cross_check: Solve exactly when the product fits and compare; sets ``exact_value``

        Returns:
            The verdict with the clause that decided it
        """
        verdict = self._decide(G, H)
        if cross_check and G.n * H.n <= MAX_PRODUCT_VERTICES:
            result = self.domination.product_domination_number(
                G, H, budget=CHARACTERIZATION_CAP - 1, first_optimum=False
            )
            if result.status == SolveStatus.EXCEEDS_BUDGET:
                # gamma >= cap is proven; finish the search for the exact value
                result = self.domination.product_domination_number(
                    G, H, lower_bound=CHARACTERIZATION_CAP, first_optimum=False
                )
            exact = int(result.value) if result.status == SolveStatus.OPTIMAL else None
            expected = ProductClass.truncate(exact)
            verdict.cross_checked = True
            verdict.exact_value = exact
            if expected != verdict.product_class:
                raise VerificationError(verdict.clause, "verdict disagrees with the exact solver", {
                    "n_g": G.n, "n_h": H.n, "class": verdict.product_class.value, "solver": exact,
                })
        self.logger.debug(f"Classified {G.n}x{H.n} as {verdict.product_class.value} via {verdict.clause}")
        return verdict
