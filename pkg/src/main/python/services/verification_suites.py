"""Property suites executed by ``moddom verify``.

Each suite returns a ``SuiteResult`` with the number of checks it ran and
one failure entry per violated property. Failure entries carry the factor
graphs in graph6 so they can be replayed with ``moddom compute``.
"""
import logging
import random
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..config.search_config import MAX_ISOMORPHISM_VERTICES, RunConfig
from ..interfaces.errors import ModularDominationError
from ..models.domain_models import (
    CornerKind,
    EdgeKind,
    FamilyKind,
    FamilySpec,
    ProductClass,
    ProductVertex,
    Snake,
    SolveResult,
    SolveStatus,
    SuiteResult,
)
from ..models.graph import Graph, VertexSet
from ..parsers.graph6_parser import emit_graph6, parse_graph6
from ..parsers.family_parser import parse_family_spec
from ..utils.bitset_utils import mask_from
from .bounds import (
    BoundsCalculator,
    corner_kind,
    is_snake,
    projections,
    rectangle_closure_matches,
)
from .characterization import CharacterizationCalculator
from .domination import (
    DominationCalculator,
    dominating_via_index_sets,
    has_distant_pair,
    is_dominating,
    is_efficient_closed,
    is_product_dominating,
    is_sdctd,
    is_total_dominating,
)
from .families import enumerate_all_graphs, enumerate_graph_classes, generate, petersen_vertex, random_graph
from .products import (
    are_isomorphic,
    cartesian_rows,
    classify_edge,
    codirect_rows,
    direct_rows,
    dominates,
    lexicographic_product,
    modular_product,
    strong_product,
)

Pair = Tuple[Graph, Graph]

# Largest factor used by the random snake and rectangle suites
_SAMPLED_FACTOR_N = 6
# Labelled pairs are enumerated exhaustively up to this size
_EXHAUSTIVE_PAIR_N = 4
_GRAPH_CORE_N = 8
_GRAPH6_ROUND_TRIP_N = 30

_ECD_FAMILIES = [
    "cycle:6", "cycle:9",
    "path:4", "path:5", "path:6", "path:7", "path:8", "path:9",
    "cube", "cube-minus",
    "kbip-minus:2:2", "kbip-minus:2:3", "kbip-minus:3:2", "kbip-minus:3:3",
]


def _ids(*graphs: Graph) -> Dict[str, str]:
    return {name: emit_graph6(graph) for name, graph in zip(("g", "h"), graphs)}


def naive_product_domination(G: Graph, H: Graph) -> Tuple[int, List[int]]:
    """Smallest dominating set of the materialised product by plain enumeration."""
    product = modular_product(G, H)
    rows = product.closed_rows
    for size in range(1, product.n + 1):
        for subset in combinations(range(product.n), size):
            covered = 0
            for v in subset:
                covered |= rows[v]
            if covered == product.full:
                return size, list(subset)
    raise AssertionError("the whole vertex set always dominates")


def _no_smaller_set(rows: Sequence[int], n: int, target: int, value: int) -> bool:
    """No ``value - 1`` candidates have rows covering ``target``."""
    if value <= 1:
        return True
    for subset in combinations(range(n), value - 1):
        covered = 0
        for v in subset:
            covered |= rows[v]
        if covered & target == target:
            return False
    return True


def _random_cover_order(rows: Sequence[int], full: int, rng: random.Random) -> Optional[List[int]]:
    """Shuffled prefix of the vertices whose rows cover ``full``."""
    order = list(range(len(rows)))
    rng.shuffle(order)
    covered = 0
    chosen = []
    for v in order:
        if covered == full:
            break
        if rows[v] & ~covered:
            chosen.append(v)
            covered |= rows[v]
    return chosen if covered == full else None


def _random_staircase(D_G: List[int], D_H: List[int], rng: random.Random) -> Snake:
    """Monotone lattice walk whose projections are exactly ``D_G`` and ``D_H``."""
    i = j = 0
    entries = [ProductVertex(D_G[0], D_H[0])]
    while i < len(D_G) - 1 or j < len(D_H) - 1:
        if j == len(D_H) - 1 or (i < len(D_G) - 1 and rng.random() < 0.5):
            i += 1
        else:
            j += 1
        entries.append(ProductVertex(D_G[i], D_H[j]))
    return Snake(tuple(entries))


def _random_walk_snake(G: Graph, H: Graph, rng: random.Random) -> Snake:
    g, h = rng.randrange(G.n), rng.randrange(H.n)
    entries = [ProductVertex(g, h)]
    for _ in range(rng.randrange(6)):
        if rng.random() < 0.5:
            g = rng.randrange(G.n)
        else:
            h = rng.randrange(H.n)
        entries.append(ProductVertex(g, h))
    return Snake(tuple(entries))


def _closed_hits(graph: Graph, v: int, members: Sequence[int]) -> set:
    row = graph.closed_rows[v]
    return {x for x in members if row >> x & 1}


class VerificationSuites:
    """Runs every property suite against the configured solvers."""

    def __init__(
        self,
        config: RunConfig,
        domination: Optional[DominationCalculator] = None,
    ):
        """
        Initialize the suites.

        Args:
            config: Run configuration with caps, seed and sample sizes
            domination: Solver under test; a deliberately broken one can be injected
        """
        self.config = config
        self.domination = domination or DominationCalculator()
        self.bounds = BoundsCalculator(self.domination)
        self.characterization = CharacterizationCalculator(self.domination)
        self.logger = logging.getLogger(__name__)
        self._pairs: Optional[List[Pair]] = None
        self._exact: Dict[Pair, SolveResult] = {}

    # plumbing

    def suites(self) -> List[Tuple[str, Callable[[SuiteResult], None]]]:
        return [
            ("graph_core", self.check_graph_core),
            ("families_ecd", self.check_families_ecd),
            ("product_edge_partition", self.check_product_edge_partition),
            ("dominates_adjacency", self.check_dominates_adjacency),
            ("eq1_isomorphism", self.check_eq1_isomorphism),
            ("commutativity", self.check_commutativity),
            ("product_oracle", self.check_product_oracle),
            ("index_set_oracle", self.check_index_set_oracle),
            ("cor_sufficient", self.check_cor_sufficient),
            ("total2", self.check_total2),
            ("sdctd_sandwich", self.check_sdctd_sandwich),
            ("distant_pair_sdctd", self.check_distant_pair_sdctd),
            ("witness_minimality", self.check_witness_minimality),
            ("private_neighbors", self.check_private_neighbors),
            ("snake_theorem", self.check_snake_theorem),
            ("snake_lemma", self.check_snake_lemma),
            ("corner_theorem", self.check_corner_theorem),
            ("rectangle_lemma", self.check_rectangle_lemma),
            ("diameter3_construction", self.check_diameter3_construction),
            ("sandwich", self.check_sandwich),
            ("univ_sharpness", self.check_univ_sharpness),
            ("characterization", self.check_characterization),
            ("dom3_iv_constructive", self.check_dom3_iv_constructive),
            ("mirror_symmetry", self.check_mirror_symmetry),
            ("petersen_gamma_sets", self.check_petersen_gamma_sets),
        ]

    def run_suite(self, name: str, check: Callable[[SuiteResult], None]) -> SuiteResult:
        result = SuiteResult(name)
        self.logger.info(f"Running suite {name}")
        try:
            check(result)
        except ModularDominationError as e:
            result.fail(f"suite aborted: {e}", error=type(e).__name__, **getattr(e, "details", {}))
        for failure in result.failures:
            self.logger.warning(f"[{name}] {failure['message']}")
        self.logger.info(f"Suite {name}: {result.checks} checks, {len(result.failures)} failures")
        return result

    def run_all(self) -> List[SuiteResult]:
        return [self.run_suite(name, check) for name, check in self.suites()]

    def _rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.config.seed}/{suite}")

    def _graphs_up_to(self, n_max: int, connected: bool = False) -> Iterator[Graph]:
        for n in range(1, n_max + 1):
            yield from enumerate_all_graphs(n, connected=connected)

    def _classes_up_to(self, n_max: int) -> Iterator[Graph]:
        for n in range(1, n_max + 1):
            yield from enumerate_graph_classes(n)

    def pair_population(self) -> List[Pair]:
        """Every labelled pair up to four vertices, plus sampled pairs at five."""
        if self._pairs is None:
            graphs = list(self._graphs_up_to(min(self.config.pair_max_n, _EXHAUSTIVE_PAIR_N)))
            pairs = [(G, H) for G in graphs for H in graphs]
            if self.config.pair_max_n > _EXHAUSTIVE_PAIR_N:
                rng = self._rng("pairs")
                n = self.config.pair_max_n
                pairs.extend((random_graph(n, rng), random_graph(n, rng)) for _ in range(self.config.random_pairs))
            self._pairs = pairs
            self.logger.debug(f"Pair population: {len(pairs)} pairs")
        return self._pairs

    def _random_pairs(self, suite: str, n_max: int, count: int) -> Iterator[Pair]:
        rng = self._rng(suite)
        for _ in range(count):
            yield random_graph(rng.randint(1, n_max), rng), random_graph(rng.randint(1, n_max), rng)

    def exact(self, G: Graph, H: Graph) -> SolveResult:
        key = (G, H)
        if key not in self._exact:
            self._exact[key] = self.domination.product_domination_number(G, H)
        return self._exact[key]

    # graph_core and families

    def check_graph_core(self, result: SuiteResult) -> None:
        rng = self._rng("graph_core")
        for _ in range(self.config.random_graphs):
            G = random_graph(rng.randint(1, _GRAPH_CORE_N), rng)
            result.checks += 1
            if G.complement().complement() != G:
                result.fail("double complement differs", **_ids(G))
            for v in range(G.n):
                if G.closed_neighborhood(v) != G.open_neighborhood(v) | VertexSet.from_vertices(G.n, [v]):
                    result.fail("closed neighbourhood is not open plus self", vertex=v, **_ids(G))
            complete = G.n >= 2 and G.edge_count == G.n * (G.n - 1) // 2
            if (G.diameter() == 1) != complete:
                result.fail("diameter one does not match completeness", **_ids(G))
            universal = any(G.closed_rows[v] == G.full for v in range(G.n))
            if (G.has_universal_vertex() is not None) != universal:
                result.fail("universal vertex detection disagrees with the rows", **_ids(G))
        for _ in range(self.config.random_graphs):
            G = random_graph(rng.randint(1, _GRAPH6_ROUND_TRIP_N), rng)
            result.checks += 1
            if parse_graph6(emit_graph6(G)) != G:
                result.fail("graph6 round trip changed the graph", **_ids(G))

    def check_families_ecd(self, result: SuiteResult) -> None:
        for text in _ECD_FAMILIES:
            graph = generate(parse_family_spec(text))
            result.checks += 1
            found = self.domination.find_ecd_set(graph)
            if found is None:
                result.fail("expected ECD graph has no ECD set", family=text)
            elif not is_efficient_closed(graph, found):
                result.fail("returned ECD set is not efficient", family=text, set=found.to_list())
        for text in ("path:8", "cycle:7", "petersen", "kminusm:3", "cube-minus", "kbip:2:3"):
            inner = parse_family_spec(text)
            result.checks += 1
            if generate(FamilySpec(FamilyKind.COMPLEMENT, inner=inner)) != generate(inner).complement():
                result.fail("complement family differs from the complement", family=text)

    # products

    def check_product_edge_partition(self, result: SuiteResult) -> None:
        for G, H in self._random_pairs("product_edge_partition", self.config.pair_max_n, self.config.random_pairs):
            result.checks += 1
            product = modular_product(G, H)
            parts = list(zip(cartesian_rows(G, H), direct_rows(G, H), codirect_rows(G, H)))
            for a in range(product.n):
                c, d, e = parts[a]
                if c & d or c & e or d & e or (c | d | e) != product.adj[a]:
                    result.fail("edge classes overlap or miss an edge", flat=a, **_ids(G, H))
                    break
                for b in range(product.n):
                    if a == b:
                        continue
                    kind = classify_edge(G, H, ProductVertex.from_flat(a, H.n), ProductVertex.from_flat(b, H.n))
                    if (kind != EdgeKind.NONE) != bool(product.adj[a] >> b & 1):
                        result.fail("classify_edge disagrees with the product", a=a, b=b, **_ids(G, H))

    def check_dominates_adjacency(self, result: SuiteResult) -> None:
        graphs = list(self._graphs_up_to(min(self.config.pair_max_n, 3)))
        for G in graphs:
            for H in graphs:
                result.checks += 1
                product = modular_product(G, H)
                for a in range(product.n):
                    for b in range(product.n):
                        expected = a == b or bool(product.adj[a] >> b & 1)
                        got = dominates(G, H, ProductVertex.from_flat(a, H.n), ProductVertex.from_flat(b, H.n))
                        if got != expected:
                            result.fail("dominates disagrees with product adjacency", a=a, b=b, **_ids(G, H))

    def check_eq1_isomorphism(self, result: SuiteResult) -> None:
        """``G⋄K_t``, ``G⊠K_t`` and ``G∘K_t`` coincide under the identity labelling."""
        for G in self._graphs_up_to(self.config.pair_max_n):
            for t in (1, 2, 3):
                K = generate(FamilySpec(FamilyKind.COMPLETE, (t,)))
                modular = modular_product(G, K)
                strong, lexicographic = strong_product(G, K), lexicographic_product(G, K)
                result.checks += 1
                if not modular == strong == lexicographic:
                    result.fail("products with K_t differ as labelled graphs", t=t, **_ids(G))
                elif modular.n <= MAX_ISOMORPHISM_VERTICES and not are_isomorphic(modular, strong):
                    result.fail("are_isomorphic rejects equal graphs", t=t, **_ids(G))

    def check_commutativity(self, result: SuiteResult) -> None:
        for G, H in self._random_pairs("commutativity", self.config.pair_max_n, self.config.random_pairs):
            result.checks += 1
            left, right = modular_product(G, H), modular_product(H, G)
            swap = [ProductVertex.from_flat(a, H.n).swapped().flat(G.n) for a in range(left.n)]
            if any((left.adj[a] >> b & 1) != (right.adj[swap[a]] >> swap[b] & 1)
                   for a in range(left.n) for b in range(left.n)):
                result.fail("coordinate swap is not an isomorphism", **_ids(G, H))
            elif left.n <= MAX_ISOMORPHISM_VERTICES and not are_isomorphic(left, right):
                result.fail("are_isomorphic rejects swapped product", **_ids(G, H))

    # domination

    def check_product_oracle(self, result: SuiteResult) -> None:
        for G, H in self.pair_population():
            result.checks += 1
            exact = self.exact(G, H)
            naive, witness = naive_product_domination(G, H)
            if exact.status != SolveStatus.OPTIMAL or int(exact.value) != naive:
                result.fail("solver value differs from brute force", solver=exact.value.to_json(),
                            brute_force=naive, brute_force_witness=witness, **_ids(G, H))
                continue
            found = exact.product_witness(H.n)
            if not is_product_dominating(G, H, found):
                result.fail("solver witness does not dominate", witness=[v.to_list() for v in found], **_ids(G, H))

    def check_index_set_oracle(self, result: SuiteResult) -> None:
        rng = self._rng("index_set_oracle")
        for _ in range(self.config.random_sets):
            G = random_graph(rng.randint(1, self.config.pair_max_n), rng)
            H = random_graph(rng.randint(1, self.config.pair_max_n), rng)
            size = rng.randint(1, min(4, G.n * H.n))
            flat = rng.sample(range(G.n * H.n), size)
            D = [ProductVertex.from_flat(a, H.n) for a in flat]
            result.checks += 1
            product = modular_product(G, H)
            direct = is_dominating(product, VertexSet(mask_from(flat), product.n))
            if dominating_via_index_sets(G, H, D) != direct:
                result.fail("index-set check disagrees with the product", set=[v.to_list() for v in D], **_ids(G, H))

    def check_cor_sufficient(self, result: SuiteResult) -> None:
        for G, H in self.pair_population():
            exact = self.exact(G, H)
            if exact.witness is None:
                continue
            result.checks += 1
            proj_g, proj_h = projections(G, H, exact.product_witness(H.n))
            if not (is_dominating(G, proj_g) or is_total_dominating(H.complement(), proj_h)):
                result.fail("neither projection condition holds", witness=exact.witness.to_list(), **_ids(G, H))

    def check_total2(self, result: SuiteResult) -> None:
        for G in self._classes_up_to(self.config.single_max_n):
            result.checks += 1
            total = self.domination.total_domination_number(G.complement()).value
            if (G.diameter() >= 3) != (total == 2):
                result.fail("diameter >= 3 does not match gamma_t(complement) = 2",
                            total=total.to_json(), **_ids(G))

    def check_sdctd_sandwich(self, result: SuiteResult) -> None:
        for G in self._classes_up_to(self.config.single_max_n):
            result.checks += 1
            gamma = self.domination.domination_number(G).value
            sdctd = self.domination.sdctd_number(G).value
            total = self.domination.total_domination_number(G.complement()).value
            if sdctd.is_finite != (G.has_universal_vertex() is None):
                result.fail("SDCTD finiteness does not match absence of a universal vertex", **_ids(G))
            if sdctd.is_finite and not (gamma <= sdctd and sdctd <= gamma + total):
                result.fail("SDCTD number outside [gamma, gamma + gamma_t(complement)]",
                            sdctd=sdctd.to_json(), **_ids(G))
            if G.is_connected() and G.diameter() >= 3 and not sdctd <= gamma + 2:
                result.fail("SDCTD number exceeds gamma + 2 at diameter >= 3", sdctd=sdctd.to_json(), **_ids(G))

    def check_distant_pair_sdctd(self, result: SuiteResult) -> None:
        for G in self._classes_up_to(self.config.single_max_n):
            for D in self.domination.minimum_dominating_sets(G):
                if has_distant_pair(G, D) is None:
                    continue
                result.checks += 1
                if not is_sdctd(G, D):
                    result.fail("dominating set with a distant pair is not SDCTD", set=D.to_list(), **_ids(G))

    def check_witness_minimality(self, result: SuiteResult) -> None:
        for G in self._classes_up_to(self.config.single_max_n):
            complement = G.complement()
            sdctd_rows = [G.closed_rows[u] | (complement.adj[u] << G.n) for u in range(G.n)]
            cases = [
                ("gamma", self.domination.domination_number(G), G.closed_rows, G.full, is_dominating),
                ("gamma_t", self.domination.total_domination_number(G), G.adj, G.full, is_total_dominating),
                ("sdctd", self.domination.sdctd_number(G), sdctd_rows, (1 << 2 * G.n) - 1, is_sdctd),
            ]
            for name, solved, rows, target, verifier in cases:
                result.checks += 1
                if solved.witness is None:
                    if _no_smaller_set(rows, G.n, target, G.n + 1):
                        continue
                    result.fail(f"{name} reported infinite but a set exists", **_ids(G))
                    continue
                value = int(solved.value)
                if len(solved.witness) != value or not verifier(G, solved.witness):
                    result.fail(f"{name} witness fails its verifier", set=solved.witness.to_list(), **_ids(G))
                elif not _no_smaller_set(rows, G.n, target, value):
                    result.fail(f"{name} is not minimum", value=value, **_ids(G))

    def check_private_neighbors(self, result: SuiteResult) -> None:
        for G in self._classes_up_to(self.config.single_max_n):
            D = self.domination.domination_number(G).witness
            for v in D:
                result.checks += 1
                if not len(G.private_neighbors(v, D)):
                    result.fail("vertex of a minimum dominating set has no private neighbour",
                                vertex=v, set=D.to_list(), **_ids(G))

    # bounds

    def _dominating_snakes(self, suite: str) -> Iterator[Tuple[Graph, Graph, Snake]]:
        rng = self._rng(suite)
        n_max = min(self.config.max_n, _SAMPLED_FACTOR_N)
        produced = 0
        while produced < self.config.random_snakes:
            G, H = random_graph(rng.randint(1, n_max), rng), random_graph(rng.randint(1, n_max), rng)
            if rng.random() < 0.5:
                D_G = _random_cover_order(G.closed_rows, G.full, rng)
                D_H = _random_cover_order(H.closed_rows, H.full, rng)
            else:
                D_G = _random_cover_order(G.complement().adj, G.full, rng)
                D_H = _random_cover_order(H.complement().adj, H.full, rng)
            if D_G is None or D_H is None:
                continue
            produced += 1
            yield G, H, _random_staircase(D_G, D_H, rng)

    def check_snake_theorem(self, result: SuiteResult) -> None:
        for G, H, snake in self._dominating_snakes("snake_theorem"):
            result.checks += 1
            entries = list(snake)
            if not is_snake(entries) or not dominating_via_index_sets(G, H, entries):
                result.fail("snake with dominating projections does not dominate",
                            snake=[v.to_list() for v in entries], **_ids(G, H))

    def check_snake_lemma(self, result: SuiteResult) -> None:
        rng = self._rng("snake_lemma")
        n_max = min(self.config.max_n, _SAMPLED_FACTOR_N)
        for _ in range(self.config.random_snakes):
            G, H = random_graph(rng.randint(1, n_max), rng), random_graph(rng.randint(1, n_max), rng)
            snake = _random_walk_snake(G, H, rng)
            entries = list(snake)
            proj_g, proj_h = projections(G, H, entries)
            first = entries[0]
            result.checks += 1
            for g in range(G.n):
                for h in range(H.n):
                    target = ProductVertex(g, h)
                    if any(dominates(G, H, v, target) for v in entries):
                        continue
                    near_g = G.closed_neighborhood(g)
                    near_h = H.closed_neighborhood(h)
                    if first.g in near_g:
                        holds = proj_g.issubset(near_g) and not len(near_h & proj_h)
                    else:
                        holds = proj_h.issubset(near_h) and not len(near_g & proj_g)
                    if not holds:
                        result.fail("undominated vertex violates the projection equalities",
                                    vertex=target.to_list(), snake=[v.to_list() for v in entries], **_ids(G, H))

    def check_corner_theorem(self, result: SuiteResult) -> None:
        for G, H, snake in self._dominating_snakes("corner_theorem"):
            entries = list(snake)
            for i in range(1, len(entries) + 1):
                kind = corner_kind(snake, i)
                if kind == CornerKind.NONE:
                    continue
                result.checks += 1
                if kind == CornerKind.G_CORNER:
                    ok = _corner_conclusion(G, H, entries, i)
                else:
                    ok = _corner_conclusion(H, G, [v.swapped() for v in entries], i)
                if not ok:
                    result.fail("privately dominated vertex breaks the corner conclusion", index=i,
                                kind=kind.value, snake=[v.to_list() for v in entries], **_ids(G, H))

    def check_rectangle_lemma(self, result: SuiteResult) -> None:
        rng = self._rng("rectangle_lemma")
        checked = 0
        while checked < self.config.random_pairs:
            G = random_graph(rng.randint(2, _SAMPLED_FACTOR_N), rng)
            H = random_graph(rng.randint(2, _SAMPLED_FACTOR_N), rng)
            g1, g2 = rng.sample(range(G.n), 2)
            h1, h2 = rng.sample(range(H.n), 2)
            checked += 1
            result.checks += 1
            if not rectangle_closure_matches(G, H, g1, g2, h1, h2):
                result.fail("reduced rectangle changes the closed neighbourhood",
                            corners=[g1, g2, h1, h2], **_ids(G, H))

    def diameter3_factors(self) -> List[Graph]:
        """Isomorphism classes on up to six vertices with diameter at least three."""
        n_max = min(self.config.single_max_n, _SAMPLED_FACTOR_N)
        return [G for G in self._classes_up_to(n_max) if G.diameter() >= 3]

    def check_diameter3_construction(self, result: SuiteResult) -> None:
        factors = self.diameter3_factors()
        for G in factors:
            for H in factors:
                result.checks += 1
                witness = self.bounds.diam3_construction(G, H)
                if witness is None or len(witness) != 3:
                    result.fail("diameter-3 construction returned no 3-set", **_ids(G, H))

    def check_sandwich(self, result: SuiteResult) -> None:
        for G, H in self.pair_population():
            result.checks += 1
            exact = self.exact(G, H)
            report = self.bounds.best_upper_bound(G, H)
            if exact.status == SolveStatus.OPTIMAL and not report.lower <= int(exact.value) <= report.upper:
                result.fail("exact value outside the bounds", lower=report.lower, upper=report.upper,
                            exact=exact.value.to_json(), upper_rule=report.upper_rule, **_ids(G, H))
            product = modular_product(G, H)
            for fragment in report.fragments:
                flat = VertexSet(mask_from(v.flat(H.n) for v in fragment.witness), product.n)
                if not (is_dominating(product, flat) and dominating_via_index_sets(G, H, fragment.witness)):
                    result.fail("bound witness fails an oracle", rule=fragment.rule,
                                witness=[v.to_list() for v in fragment.witness], **_ids(G, H))

    def check_univ_sharpness(self, result: SuiteResult) -> None:
        with_universal = [H for H in self._classes_up_to(min(self.config.pair_max_n, _EXHAUSTIVE_PAIR_N))
                          if H.has_universal_vertex() is not None]
        stars = [generate(FamilySpec(kind, (t,)))
                 for kind in (FamilyKind.COMPLETE, FamilyKind.STAR) for t in (2, 3)]
        for G in self._classes_up_to(self.config.pair_max_n):
            gamma = self.domination.domination_number(G).value
            for H in with_universal + stars:
                result.checks += 1
                value = self.domination.product_domination_number(G, H).value
                if value != gamma:
                    result.fail("universal vertex factor does not give gamma(G)", value=value.to_json(),
                                gamma=gamma.to_json(), **_ids(G, H))

    # characterization

    def check_characterization(self, result: SuiteResult) -> None:
        for G, H in self.pair_population():
            result.checks += 1
            verdict = self.characterization.classify(G, H, cross_check=False)
            exact = self.exact(G, H)
            expected = ProductClass.truncate(int(exact.value) if exact.value.is_finite else None)
            if verdict.product_class != expected:
                result.fail("classification disagrees with the exact value", clause=verdict.clause,
                            verdict=verdict.product_class.value, exact=exact.value.to_json(), **_ids(G, H))

    def check_dom3_iv_constructive(self, result: SuiteResult) -> None:
        for G, H in self.pair_population():
            if not self.characterization.at_least_three(G, H):
                continue
            found = self.characterization.dom3_iv_witness(G, H)
            if found is None:
                continue
            result.checks += 1
            diagonal = [ProductVertex(g, h) for g, h in zip(*found)]
            if not dominating_via_index_sets(G, H, diagonal):
                result.fail("diagonal of the triples does not dominate",
                            triples=[list(found[0]), list(found[1])], **_ids(G, H))

    def check_mirror_symmetry(self, result: SuiteResult) -> None:
        for G, H in self.pair_population():
            result.checks += 1
            left = self.characterization.classify(G, H, cross_check=False).product_class
            right = self.characterization.classify(H, G, cross_check=False).product_class
            if left != right:
                result.fail("classification is not symmetric", left=left.value, right=right.value, **_ids(G, H))

    def check_petersen_gamma_sets(self, result: SuiteResult) -> None:
        petersen = generate(FamilySpec(FamilyKind.PETERSEN))
        found = self.domination.minimum_dominating_sets(petersen)
        expected = sorted((petersen.open_neighborhood(v) for v in range(petersen.n)), key=lambda s: s.to_list())
        result.checks += 1
        if sorted(found, key=lambda s: s.to_list()) != expected:
            result.fail("Petersen gamma-sets are not exactly the open neighbourhoods",
                        found=[s.to_list() for s in found])
        result.checks += 1
        sdctd_set = VertexSet.from_vertices(petersen.n, [petersen_vertex(x) for x in ("x2", "y1", "y5", "x4")])
        if not is_sdctd(petersen, sdctd_set):
            result.fail("documented SDCTD set of the Petersen graph fails", set=sdctd_set.to_list())


def _corner_conclusion(G: Graph, H: Graph, entries: List[ProductVertex], i: int) -> bool:
    """Check the G-corner conclusion at the ``i``-th entry (1-based) of a dominating snake."""
    if len(set(entries)) != len(entries):
        return True
    corner = entries[i - 1]
    xs = [v.g for v in entries]
    ys = [v.h for v in entries]
    for g in range(G.n):
        for h in range(H.n):
            target = ProductVertex(g, h)
            dominators = [v for v in entries if dominates(G, H, v, target)]
            if dominators != [corner]:
                continue
            hits_g = _closed_hits(G, g, xs)
            hits_h = _closed_hits(H, h, ys)
            first = hits_g == set(xs[:i]) and hits_h == set(ys[i - 1:])
            second = hits_g == set(xs[i:]) and hits_h == set(ys[:i - 1])
            if not (first or second):
                return False
    return True
