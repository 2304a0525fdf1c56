"""Lower and upper bounds on the domination number of modular products.

Every upper bound comes with a concrete dominating set. Witnesses are
verified before they are reported; a failing witness raises
``VerificationError`` instead of being skipped.
"""
import logging
from itertools import combinations
from typing import Callable, List, Optional, Sequence, Tuple

from ..config.search_config import (
    MAX_INDEX_SET_SIZE,
    RULE_BASIC_SNAKE,
    RULE_CASE3,
    RULE_COR1,
    RULE_COR13,
    RULE_CORNER_REMOVAL,
    RULE_DIAM3,
    RULE_DIAM3_NO_ECD,
    RULE_DIAM5,
    RULE_ECD,
    RULE_IZROK,
    RULE_LOBOUND,
    RULE_PROP2,
    RULE_PROP4,
    RULE_SDCTD,
    RULE_UNIV,
    UPPER_RULE_ORDER,
)
from ..interfaces.errors import GraphUsageError, VerificationError
from ..models.domain_models import (
    BoundFragment,
    BoundReport,
    CornerKind,
    ProductVertex,
    SolveResult,
    Snake,
)
from ..models.graph import Graph, VertexSet
from ..utils.bitset_utils import popcount
from .domination import (
    DominationCalculator,
    dominating_via_index_sets,
    has_distant_pair,
    is_product_dominating,
)
from .products import check_product_vertex, closed_product_row

Witness = List[ProductVertex]


def is_snake(D: Sequence[ProductVertex]) -> bool:
    """Consecutive entries share a coordinate; a single entry is a snake."""
    if not D:
        return False
    return all(a.g == b.g or a.h == b.h for a, b in zip(D, D[1:]))


def projections(G: Graph, H: Graph, D: Sequence[ProductVertex]) -> Tuple[VertexSet, VertexSet]:
    for v in D:
        check_product_vertex(G, H, v)
    return VertexSet.from_vertices(G.n, [v.g for v in D]), VertexSet.from_vertices(H.n, [v.h for v in D])


def build_snake(D_G: Sequence[int], D_H: Sequence[int]) -> Snake:
    """Staircase (g1,h1),(g2,h1),(g2,h2),(g3,h2),... of length |D_G| + |D_H| - 1."""
    if not D_G or not D_H:
        raise GraphUsageError("staircase needs two nonempty vertex lists")
    if len(set(D_G)) != len(D_G) or len(set(D_H)) != len(D_H):
        raise GraphUsageError("staircase vertex lists must not repeat vertices")
    k, t = len(D_G), len(D_H)
    i = j = 0
    entries = [ProductVertex(D_G[0], D_H[0])]
    advance_g = True
    while i < k - 1 or j < t - 1:
        if (advance_g and i < k - 1) or j == t - 1:
            i += 1
        else:
            j += 1
        entries.append(ProductVertex(D_G[i], D_H[j]))
        advance_g = not advance_g
    return Snake(tuple(entries))


def _is_g_snake(part: Sequence[ProductVertex]) -> bool:
    return len(part) == 1 or part[0].g == part[1].g


def _is_h_snake(part: Sequence[ProductVertex]) -> bool:
    return len(part) == 1 or part[0].h == part[1].h


def corner_kind(snake: Snake, i: int) -> CornerKind:
    """Corner type of the ``i``-th entry (1-based); G-corner wins when both apply."""
    q = len(snake)
    if not 1 <= i <= q:
        raise GraphUsageError(f"snake index {i} outside 1..{q}")
    entries = snake.entries
    minus = entries[:i][::-1]
    plus = entries[i - 1:]
    if _is_g_snake(minus) and _is_h_snake(plus):
        return CornerKind.G_CORNER
    if _is_h_snake(minus) and _is_g_snake(plus):
        return CornerKind.H_CORNER
    return CornerKind.NONE


def _check_rectangle(G: Graph, H: Graph, g1: int, g2: int, h1: int, h2: int) -> None:
    if g1 == g2 or h1 == h2:
        raise GraphUsageError(f"rectangle needs distinct coordinates, got g=({g1},{g2}) h=({h1},{h2})")
    for g in (g1, g2):
        check_product_vertex(G, H, ProductVertex(g, h1))
    check_product_vertex(G, H, ProductVertex(g1, h2))


def reduce_rectangle(G: Graph, H: Graph, g1: int, g2: int, h1: int, h2: int) -> Witness:
    """Drop ``(g2, h2)`` from the rectangle; the closed neighbourhood is unchanged."""
    _check_rectangle(G, H, g1, g2, h1, h2)
    return [ProductVertex(g1, h1), ProductVertex(g1, h2), ProductVertex(g2, h1)]


def rectangle_closure(G: Graph, H: Graph, D: Sequence[ProductVertex]) -> int:
    """Closed neighbourhood of a product vertex set as a flat mask."""
    closed = 0
    for v in D:
        closed |= closed_product_row(G, H, v.g, v.h)
    return closed


def rectangle_closure_matches(G: Graph, H: Graph, g1: int, g2: int, h1: int, h2: int) -> bool:
    """The reduced three-set has the same closed neighbourhood as the full rectangle."""
    reduced = reduce_rectangle(G, H, g1, g2, h1, h2)
    full = reduced + [ProductVertex(g2, h2)]
    return rectangle_closure(G, H, reduced) == rectangle_closure(G, H, full)


def _swap(witness: Optional[Witness]) -> Optional[Witness]:
    if witness is None:
        return None
    return [v.swapped() for v in witness]


def _dedupe(witness: Witness) -> Witness:
    return sorted(set(witness))


def _first_distant_pair(graph: Graph) -> Optional[Tuple[int, int]]:
    for u, v in combinations(range(graph.n), 2):
        if graph.distance(u, v) >= 3:
            return u, v
    return None


def separated_edge(graph: Graph) -> Optional[Tuple[int, int, int]]:
    """Adjacent ``u, v`` with disjoint open neighbourhoods missing some ``w``."""
    for u, v in graph.edges():
        if graph.adj[u] & graph.adj[v]:
            continue
        outside = graph.full & ~(graph.adj[u] | graph.adj[v])
        if outside:
            return u, v, (outside & -outside).bit_length() - 1
    return None


class BoundsCalculator:
    """Evaluates every lower and upper bound rule with verified witnesses."""

    def __init__(self, domination: Optional[DominationCalculator] = None):
        """
        Initialize the bounds calculator.

        Args:
            domination: Solver used for factor invariants and exact products
        """
        self.domination = domination or DominationCalculator()
        self.logger = logging.getLogger(__name__)

    # factor invariants

    def _gamma(self, graph: Graph) -> int:
        return int(self.domination.domination_number(graph).value)

    def _gamma_set(self, graph: Graph) -> List[int]:
        return self.domination.domination_number(graph).witness.to_list()

    def _total_complement(self, graph: Graph) -> SolveResult:
        return self.domination.total_domination_number(graph.complement())

    def verify(self, G: Graph, H: Graph, witness: Sequence[ProductVertex], rule: str) -> None:
        """Raise ``VerificationError`` unless ``witness`` dominates ``G⋄H``."""
        if len(witness) <= MAX_INDEX_SET_SIZE:
            ok = dominating_via_index_sets(G, H, witness)
        else:
            ok = is_product_dominating(G, H, witness)
        if not ok:
            raise VerificationError(rule, "constructed set does not dominate the product", {
                "n_g": G.n, "n_h": H.n, "witness": [v.to_list() for v in witness],
            })

    # lower bounds

    def _lower_term(self, A: Graph, B: Graph) -> Tuple[int, str]:
        gamma_a = self._gamma(A)
        if B.diameter() == 2 and gamma_a <= 3:
            return gamma_a, RULE_COR1
        total = self._total_complement(B).value
        if total.is_finite and int(total) < gamma_a:
            return int(total), RULE_LOBOUND
        return gamma_a, RULE_LOBOUND

    def lower_bound_with_rule(self, G: Graph, H: Graph) -> Tuple[int, str]:
        first = self._lower_term(G, H)
        second = self._lower_term(H, G)
        best = first if first[0] >= second[0] else second
        if best[0] < 3 and G.diameter() >= 3 and H.diameter() >= 3:
            if (self.domination.find_ecd_set_of_size(G, 2) is None
                    and self.domination.find_ecd_set_of_size(H, 2) is None):
                return 3, RULE_DIAM3_NO_ECD
        return best

    def lower_bound(self, G: Graph, H: Graph) -> int:
        return self.lower_bound_with_rule(G, H)[0]

    # upper bounds

    def snake_upper_bound(self, G: Graph, H: Graph) -> BoundFragment:
        """Smaller of the two staircases, from gamma-sets and from complement total sets."""
        staircase = list(build_snake(self._gamma_set(G), self._gamma_set(H)))
        self.verify(G, H, staircase, RULE_BASIC_SNAKE)
        best = staircase
        total_g, total_h = self._total_complement(G), self._total_complement(H)
        if total_g.value.is_finite and total_h.value.is_finite:
            other = list(build_snake(total_g.witness.to_list(), total_h.witness.to_list()))
            self.verify(G, H, other, RULE_BASIC_SNAKE)
            if len(other) < len(best):
                best = other
        return BoundFragment(len(best), RULE_BASIC_SNAKE, best)

    def corner_removal(
        self, G: Graph, H: Graph, D_G: Sequence[int], D_H: Sequence[int]
    ) -> Optional[Witness]:
        """Staircase minus a corner whose neighbourhood counts are excluded.

        Tries the condition on ``G`` first, then the mirror condition on ``H``.
        """
        witness = self._corner_removal_one_side(G, H, D_G, D_H)
        if witness is None:
            witness = _swap(self._corner_removal_one_side(H, G, D_H, D_G))
        if witness is not None:
            self.verify(G, H, witness, RULE_CORNER_REMOVAL)
        return witness

    @staticmethod
    def _corner_removal_one_side(
        G: Graph, H: Graph, D_G: Sequence[int], D_H: Sequence[int]
    ) -> Optional[Witness]:
        k, t = len(D_G), len(D_H)
        if k + t - 1 < 2:
            return None
        d_mask = 0
        for g in D_G:
            d_mask |= 1 << g
        counts = {popcount(row & d_mask) for row in G.closed_rows}
        for i in range(1, min(k, t) + 1):
            if i in counts or (k - i) in counts:
                continue
            snake = build_snake(D_G, D_H)
            corner = ProductVertex(D_G[i - 1], D_H[i - 1])
            return [v for v in snake.entries if v != corner]
        return None

    def sdctd_upper_bound(self, G: Graph, H: Graph) -> Optional[BoundFragment]:
        """An SDCTD set of either factor times one vertex of the other."""
        candidates = []
        sdctd_g = self.domination.sdctd_number(G)
        if sdctd_g.value.is_finite:
            candidates.append([ProductVertex(g, 0) for g in sdctd_g.witness])
        sdctd_h = self.domination.sdctd_number(H)
        if sdctd_h.value.is_finite:
            candidates.append([ProductVertex(0, h) for h in sdctd_h.witness])
        if not candidates:
            return None
        best = min(candidates, key=len)
        self.verify(G, H, best, RULE_SDCTD)
        return BoundFragment(len(best), RULE_SDCTD, best)

    def diam3_construction(self, G: Graph, H: Graph) -> Optional[Witness]:
        if not (G.diameter() >= 3 and H.diameter() >= 3):
            return None
        g1, g2 = _first_distant_pair(G)
        h1, h2 = _first_distant_pair(H)
        witness = reduce_rectangle(G, H, g1, g2, h1, h2)
        self.verify(G, H, witness, RULE_DIAM3)
        return witness

    @staticmethod
    def _prop4_one_side(G: Graph, H: Graph) -> Optional[Witness]:
        if G.diameter() < 3:
            return None
        edge = separated_edge(H)
        if edge is None:
            return None
        g1, g2 = _first_distant_pair(G)
        h1, h2, h3 = edge
        # the rectangle's fourth corner (g2, h2) is implied by the other three
        return [ProductVertex(g1, h1), ProductVertex(g1, h2), ProductVertex(g2, h1), ProductVertex(g1, h3)]

    def prop4_construction(self, G: Graph, H: Graph) -> Optional[Witness]:
        witness = self._prop4_one_side(G, H)
        if witness is None:
            witness = _swap(self._prop4_one_side(H, G))
        if witness is not None:
            self.verify(G, H, witness, RULE_PROP4)
        return witness

    def izrok_construction(self, G: Graph, H: Graph) -> Optional[Witness]:
        edge_g = separated_edge(G)
        edge_h = separated_edge(H)
        if edge_g is None or edge_h is None:
            return None
        g1, g2, g3 = edge_g
        h1, h2, h3 = edge_h
        witness = [
            ProductVertex(g1, h1),
            ProductVertex(g1, h2),
            ProductVertex(g2, h1),
            ProductVertex(g2, h3),
            ProductVertex(g3, h1),
        ]
        self.verify(G, H, witness, RULE_IZROK)
        return witness

    def _univ(self, G: Graph, H: Graph) -> Optional[Witness]:
        u = H.has_universal_vertex()
        if u is None:
            return None
        return [ProductVertex(g, u) for g in self._gamma_set(G)]

    def _ecd(self, G: Graph, H: Graph) -> Optional[Witness]:
        if self._gamma(G) < 2:
            return None
        ecd = self.domination.find_ecd_set(G)
        if ecd is None:
            return None
        return [ProductVertex(g, 0) for g in ecd]

    def _case3(self, G: Graph, H: Graph) -> Optional[Witness]:
        gamma_set = self.domination.domination_number(G).witness
        if has_distant_pair(G, gamma_set) is None:
            return None
        return [ProductVertex(g, 0) for g in gamma_set]

    def _diam5(self, G: Graph, H: Graph) -> Optional[Witness]:
        if G.diameter() < 5:
            return None
        gamma_set = self.domination.domination_number(G).witness
        if has_distant_pair(G, gamma_set) is None:
            raise VerificationError(RULE_DIAM5, "minimum dominating set without a distant pair", {
                "n_g": G.n, "set": gamma_set.to_list(),
            })
        return [ProductVertex(g, 0) for g in gamma_set]

    def _cor13(self, G: Graph, H: Graph) -> Optional[Witness]:
        if G.diameter() < 3:
            return None
        g1, g2 = _first_distant_pair(G)
        members = set(self._gamma_set(G)) | {g1, g2}
        return [ProductVertex(g, 0) for g in sorted(members)]

    def _prop2(self, G: Graph, H: Graph) -> Optional[Witness]:
        if self._gamma(G) != 2 or self._gamma(H) != 2:
            return None
        g1, g2 = self._gamma_set(G)
        h1, h2 = self._gamma_set(H)
        return reduce_rectangle(G, H, g1, g2, h1, h2)

    def _both_orientations(self, rule: Callable[[Graph, Graph], Optional[Witness]]):
        def evaluate(G: Graph, H: Graph) -> Optional[Witness]:
            found = [w for w in (rule(G, H), _swap(rule(H, G))) if w is not None]
            return min(found, key=len) if found else None
        return evaluate

    def _corner_fragments(self, G: Graph, H: Graph) -> Optional[Witness]:
        found = []
        witness = self.corner_removal(G, H, self._gamma_set(G), self._gamma_set(H))
        if witness is not None:
            found.append(witness)
        total_g, total_h = self._total_complement(G), self._total_complement(H)
        if total_g.value.is_finite and total_h.value.is_finite:
            witness = self.corner_removal(G, H, total_g.witness.to_list(), total_h.witness.to_list())
            if witness is not None:
                found.append(witness)
        return min(found, key=len) if found else None

    def best_upper_bound(self, G: Graph, H: Graph) -> BoundReport:
        """Evaluate every rule in both orientations and keep the smallest witness."""
        rules = {
            RULE_UNIV: self._both_orientations(self._univ),
            RULE_ECD: self._both_orientations(self._ecd),
            RULE_CASE3: self._both_orientations(self._case3),
            RULE_DIAM5: self._both_orientations(self._diam5),
            RULE_PROP2: self._prop2,
            RULE_DIAM3: self.diam3_construction,
            RULE_COR13: self._both_orientations(self._cor13),
            RULE_PROP4: self.prop4_construction,
            RULE_IZROK: self.izrok_construction,
            RULE_CORNER_REMOVAL: self._corner_fragments,
        }
        fragments: List[BoundFragment] = []
        for rule in UPPER_RULE_ORDER:
            if rule == RULE_BASIC_SNAKE:
                fragments.append(self.snake_upper_bound(G, H))
                continue
            if rule == RULE_SDCTD:
                fragment = self.sdctd_upper_bound(G, H)
                if fragment is not None:
                    fragments.append(fragment)
                continue
            witness = rules[rule](G, H)
            if witness is None:
                continue
            witness = _dedupe(witness)
            self.verify(G, H, witness, rule)
            fragments.append(BoundFragment(len(witness), rule, witness))

        best = min(fragments, key=lambda f: f.value)
        lower, lower_rule = self.lower_bound_with_rule(G, H)
        self.logger.debug(
            f"Bounds for {G.n}x{H.n}: [{lower} ({lower_rule}), {best.value} ({best.rule})]"
        )
        return BoundReport(lower, lower_rule, best.value, best.rule, best.witness, fragments)

    def exact_product_domination(
        self, G: Graph, H: Graph, budget: Optional[int] = None, report: Optional[BoundReport] = None
    ) -> SolveResult:
        """Exact product domination seeded with the bounds as root bound and incumbent."""
        report = report or self.best_upper_bound(G, H)
        result = self.domination.product_domination_number(
            G, H, budget=budget, lower_bound=report.lower, incumbent=report.upper_witness
        )
        if result.witness is not None:
            witness = [v for v in result.product_witness(H.n)]
            if len(witness) <= MAX_INDEX_SET_SIZE:
                self.verify(G, H, witness, "exact")
        return result

