"""Exact solvers and verifiers for domination-type invariants."""
import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.search_config import MAX_INDEX_SET_SIZE, MAX_SUBSET_ENUMERATION_VERTICES
from ..interfaces.errors import GraphUsageError, SizeLimitError, VerificationError
from ..models.domain_models import ProductVertex, SolveResult, SolveStatus
from ..models.graph import INFINITY, ExtendedNat, Graph, VertexSet
from ..utils.bitset_utils import iter_bits, mask_from, popcount
from .cover_solver import BranchAndBoundCoverSolver, CoverOutcome, CoverProblem
from .products import check_product_size, check_product_vertex, closed_product_rows, dominates


def _check_set(graph: Graph, D: VertexSet) -> None:
    if D.n != graph.n:
        raise GraphUsageError(f"set universe {D.n} does not match n={graph.n}")


def _union(rows: Sequence[int], mask: int) -> int:
    covered = 0
    for v in iter_bits(mask):
        covered |= rows[v]
    return covered


def is_dominating(G: Graph, D: VertexSet) -> bool:
    _check_set(G, D)
    return _union(G.closed_rows, D.bits) == G.full


def is_total_dominating(G: Graph, D: VertexSet) -> bool:
    _check_set(G, D)
    return _union(G.adj, D.bits) == G.full


def is_sdctd(G: Graph, D: VertexSet) -> bool:
    """Dominating in ``G`` and totally dominating in the complement."""
    return is_dominating(G, D) and is_total_dominating(G.complement(), D)


def is_efficient_closed(G: Graph, D: VertexSet) -> bool:
    """Closed neighbourhoods of ``D`` partition ``V(G)``."""
    _check_set(G, D)
    covered = 0
    for v in D:
        if covered & G.closed_rows[v]:
            return False
        covered |= G.closed_rows[v]
    return covered == G.full


def has_distant_pair(G: Graph, D: VertexSet) -> Optional[Tuple[int, int]]:
    """First pair of ``D`` (lexicographic) at distance at least three."""
    members = D.to_list()
    for u, v in combinations(members, 2):
        if G.distance(u, v) >= 3:
            return u, v
    return None


def sdctd_from_distant_pair(G: Graph, D: VertexSet) -> Optional[VertexSet]:
    """Return ``D`` when it dominates ``G`` and holds two vertices at distance >= 3."""
    if is_dominating(G, D) and has_distant_pair(G, D) is not None:
        return D
    return None


def product_mask(G: Graph, H: Graph, D: Sequence[ProductVertex]) -> int:
    for v in D:
        check_product_vertex(G, H, v)
    return mask_from(v.flat(H.n) for v in D)


def is_product_dominating(G: Graph, H: Graph, D: Sequence[ProductVertex]) -> bool:
    """Direct coverage check of ``D`` in ``G⋄H`` from the factor neighbourhoods."""
    check_product_size(G, H)
    rows = closed_product_rows(G, H)
    return _union(rows, product_mask(G, H, D)) == (1 << (G.n * H.n)) - 1


def dominates_every_vertex(G: Graph, H: Graph, D: Sequence[ProductVertex]) -> bool:
    """Coverage of ``G⋄H`` by ``D`` decided pair by pair with ``dominates``."""
    return all(
        any(dominates(G, H, d, ProductVertex(g, h)) for d in D)
        for g in range(G.n)
        for h in range(H.n)
    )


def dominating_via_index_sets(G: Graph, H: Graph, D: Sequence[ProductVertex]) -> bool:
    """Decide whether ``D`` dominates ``G⋄H`` through index patterns.

    For each ``g`` the pattern is the set of indices ``i`` with
    ``g_i in N[g]`` (likewise for ``h``). A vertex ``(g, h)`` escapes ``D``
    exactly when the pattern of ``g`` and the pattern of ``h`` are
    complementary in ``{1..k}``; for distinct coordinates this is the
    projection form ``N[g] ∩ proj_G = {g_i : i in I}`` and
    ``N[h] ∩ proj_H = {h_i : i not in I}``.
    """
    k = len(D)
    if k > MAX_INDEX_SET_SIZE:
        raise SizeLimitError("index set size", MAX_INDEX_SET_SIZE, k)
    for v in D:
        check_product_vertex(G, H, v)
    full = (1 << k) - 1

    def patterns(graph: Graph, coords: List[int]) -> set:
        found = set()
        for x in range(graph.n):
            row = graph.closed_rows[x]
            found.add(sum(1 << i for i, c in enumerate(coords) if row >> c & 1))
        return found

    g_patterns = patterns(G, [v.g for v in D])
    h_patterns = patterns(H, [v.h for v in D])
    return not any((full & ~p) in h_patterns for p in g_patterns)


class DominationCalculator:
    """Exact domination-type invariants with per-graph memoisation."""

    def __init__(self, cover_solver: Optional[BranchAndBoundCoverSolver] = None):
        """
        Initialize the calculator.

        Args:
            cover_solver: Set cover solver used by every minimisation
        """
        self.cover_solver = cover_solver or BranchAndBoundCoverSolver()
        self.logger = logging.getLogger(__name__)
        self._cache: Dict[Tuple[str, Graph], SolveResult] = {}
        self._ecd_cache: Dict[Tuple[Optional[int], Graph], Optional[VertexSet]] = {}

    def _memo(self, key: str, graph: Graph, compute) -> SolveResult:
        entry = (key, graph)
        if entry not in self._cache:
            self._cache[entry] = compute()
        return self._cache[entry]

    @staticmethod
    def _result(outcome: CoverOutcome, width: int, budget: Optional[int] = None) -> SolveResult:
        if outcome.status == SolveStatus.OPTIMAL:
            return SolveResult(ExtendedNat(outcome.size), VertexSet(outcome.chosen, width), outcome.nodes,
                               SolveStatus.OPTIMAL)
        if outcome.status == SolveStatus.EXCEEDS_BUDGET:
            # value is a proven lower bound, not an optimum
            return SolveResult(ExtendedNat(budget + 1), None, outcome.nodes, outcome.status)
        return SolveResult(INFINITY, None, outcome.nodes, outcome.status)

    def domination_number(self, G: Graph) -> SolveResult:
        def compute():
            problem = CoverProblem(G.full, G.closed_rows, G.closed_rows)
            result = self._result(self.cover_solver.solve(problem), G.n)
            self.logger.debug(f"gamma = {result.value} for n={G.n} ({result.nodes_explored} nodes)")
            return result
        return self._memo("gamma", G, compute)

    def total_domination_number(self, G: Graph) -> SolveResult:
        def compute():
            problem = CoverProblem(G.full, G.adj, G.adj)
            return self._result(self.cover_solver.solve(problem), G.n)
        return self._memo("gamma_t", G, compute)

    def sdctd_number(self, G: Graph) -> SolveResult:
        """Minimum set dominating ``G`` and totally dominating its complement.

        Element ``v`` stands for the closed-neighbourhood constraint of ``v``
        in ``G`` and element ``n + v`` for its open-neighbourhood constraint
        in the complement.
        """
        def compute():
            complement = G.complement()
            covers = [G.closed_rows[u] | (complement.adj[u] << G.n) for u in range(G.n)]
            universe = (1 << (2 * G.n)) - 1
            return self._result(self.cover_solver.solve(CoverProblem(universe, covers)), G.n)
        return self._memo("sdctd", G, compute)

    def packing_number(self, G: Graph) -> SolveResult:
        """Largest set with pairwise disjoint closed neighbourhoods."""
        def compute():
            # u, v conflict iff N[u] and N[v] meet, i.e. distance <= 2
            conflicts = [_union(G.closed_rows, G.closed_rows[v]) for v in range(G.n)]
            state = {"best": 0, "size": 0, "nodes": 0}

            def search(candidates: int, chosen: int, size: int) -> None:
                state["nodes"] += 1
                if size + popcount(candidates) <= state["size"]:
                    return
                if candidates == 0:
                    state["best"], state["size"] = chosen, size
                    return
                v = (candidates & -candidates).bit_length() - 1
                search(candidates & ~conflicts[v], chosen | (1 << v), size + 1)
                search(candidates & ~(1 << v), chosen, size)

            search(G.full, 0, 0)
            return SolveResult(ExtendedNat(state["size"]), VertexSet(state["best"], G.n), state["nodes"],
                               SolveStatus.OPTIMAL)
        return self._memo("rho", G, compute)

    def find_ecd_set(self, G: Graph) -> Optional[VertexSet]:
        return self.find_ecd_set_of_size(G, None)

    def find_ecd_set_of_size(self, G: Graph, size: Optional[int]) -> Optional[VertexSet]:
        """Exact cover of ``V(G)`` by closed neighbourhoods, optionally of a fixed size."""
        entry = (size, G)
        if entry not in self._ecd_cache:
            self._ecd_cache[entry] = self._search_ecd(G, size)
        return self._ecd_cache[entry]

    @staticmethod
    def _search_ecd(G: Graph, size: Optional[int]) -> Optional[VertexSet]:
        rows = G.closed_rows

        def search(uncovered: int, chosen: int, count: int) -> Optional[int]:
            if uncovered == 0:
                return chosen if size is None or count == size else None
            if size is not None and count >= size:
                return None
            pivot_options = None
            for e in iter_bits(uncovered):
                # u may cover e only if N[u] lies inside the uncovered part
                options = [u for u in iter_bits(rows[e]) if rows[u] & ~uncovered == 0]
                if pivot_options is None or len(options) < len(pivot_options):
                    pivot_options = options
                    if len(options) <= 1:
                        break
            for u in pivot_options:
                found = search(uncovered & ~rows[u], chosen | (1 << u), count + 1)
                if found is not None:
                    return found
            return None

        found = search(G.full, 0, 0)
        return VertexSet(found, G.n) if found is not None else None

    def minimum_dominating_sets(self, G: Graph) -> List[VertexSet]:
        """Every dominating set of size ``gamma(G)`` in lexicographic order."""
        if G.n > MAX_SUBSET_ENUMERATION_VERTICES:
            raise SizeLimitError("subset enumeration vertex count", MAX_SUBSET_ENUMERATION_VERTICES, G.n)
        gamma = int(self.domination_number(G).value)
        found = []
        for subset in combinations(range(G.n), gamma):
            mask = mask_from(subset)
            if _union(G.closed_rows, mask) == G.full:
                found.append(VertexSet(mask, G.n))
        return found

    def product_domination_number(
        self,
        G: Graph,
        H: Graph,
        budget: Optional[int] = None,
        lower_bound: int = 0,
        incumbent: Optional[Sequence[ProductVertex]] = None,
        first_optimum: bool = True,
    ) -> SolveResult:
        """
        Exact domination number of ``G⋄H``.

        The product ``Graph`` is never built: the cover instance uses the
        closed product rows assembled from factor rows, and the final
        witness is checked pair by pair with ``dominates``.

        Args:
            G: First factor
            H: Second factor
            budget: When set, only sets of size at most ``budget`` are sought
            lower_bound: A proven lower bound used to stop the search early
            incumbent: A known dominating set used as the starting incumbent
            first_optimum: When False, only the value is canonical

        Returns:
            SolveResult whose witness is a flat product vertex set

        Raises:
            VerificationError: If the solver's witness leaves a vertex undominated
        """
        check_product_size(G, H)
        rows = closed_product_rows(G, H)
        width = G.n * H.n
        seed = product_mask(G, H, incumbent) if incumbent else None
        outcome = self.cover_solver.solve(
            CoverProblem((1 << width) - 1, rows, rows),
            budget=budget,
            lower_bound=lower_bound,
            incumbent=seed,
            first_optimum=first_optimum,
        )
        self.logger.debug(
            f"gamma(G<>H) for {G.n}x{H.n}: {outcome.status.value} {outcome.size} after {outcome.nodes} nodes"
        )
        result = self._result(outcome, width, budget)
        if result.status == SolveStatus.OPTIMAL:
            witness = result.product_witness(H.n)
            if not dominates_every_vertex(G, H, witness):
                raise VerificationError("product_domination", "solver witness does not dominate the product", {
                    "n_g": G.n, "n_h": H.n, "witness": [v.to_list() for v in witness],
                })
        return result
