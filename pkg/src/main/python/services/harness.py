"""Batch runs behind the ``moddom`` command line.

``ModularProductHarness`` resolves the inputs, runs one of the five modes
and returns a ``Report``. Reports hold no timing data unless asked for, so
equal configurations produce byte-identical output whatever the thread
count.
"""
import logging
import time
from itertools import combinations_with_replacement, product as ordered_pairs
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

from ..config.search_config import RunConfig, RunMode
from ..interfaces.errors import FamilySpecError, GraphUsageError, SizeLimitError, VerificationError
from ..interfaces.harness_interfaces import GraphSourceInterface
from ..models.domain_models import (
    NamedGraph,
    PairRecord,
    ProductClass,
    Report,
    SearchRecord,
    SolveResult,
    SolveStatus,
    SuiteResult,
)
from ..models.graph import Graph
from ..parsers.family_parser import FamilySpecSource
from ..parsers.graph6_parser import Graph6FileSource, emit_graph6
from .bounds import BoundsCalculator, separated_edge
from .characterization import CharacterizationCalculator
from .domination import DominationCalculator
from .families import enumerate_graph_classes
from .verification_suites import VerificationSuites

logger = logging.getLogger(__name__)


def load_inputs(tokens: List[str], sources: Optional[List[GraphSourceInterface]] = None) -> List[NamedGraph]:
    """Resolve CLI tokens to graphs; graph6 files win over family names."""
    sources = sources or [Graph6FileSource(), FamilySpecSource()]
    graphs: List[NamedGraph] = []
    for token in tokens:
        source = next((s for s in sources if s.supports(token)), None)
        if source is None:
            raise FamilySpecError(token, "neither a graph6 file nor a known family")
        graphs.extend(source.load(token))
    return graphs


def compute_pair(
    G: NamedGraph,
    H: NamedGraph,
    budget: Optional[int] = None,
    include_timings: bool = False,
    domination: Optional[DominationCalculator] = None,
    budget_threshold: Optional[int] = None,
) -> PairRecord:
    """Factor invariants, bounds, exact value and verdict for one pair.

    The exact value is re-verified: its witness must dominate, and when it
    lies above the lower bound no smaller set may exist. Products with more
    than ``budget_threshold`` vertices are only searched up to ``budget``,
    or up to the lower bound when no budget is given.
    """
    domination = domination or DominationCalculator()
    bounds = BoundsCalculator(domination)
    characterization = CharacterizationCalculator(domination)
    timings: Dict[str, float] = {}
    g, h = G.graph, H.graph

    start = time.perf_counter()
    gamma_g, gamma_h = domination.domination_number(g).value, domination.domination_number(h).value
    total_g = domination.total_domination_number(g.complement()).value
    total_h = domination.total_domination_number(h.complement()).value
    sdctd_g, sdctd_h = domination.sdctd_number(g).value, domination.sdctd_number(h).value
    timings["factors"] = time.perf_counter() - start

    start = time.perf_counter()
    report = bounds.best_upper_bound(g, h)
    timings["bounds"] = time.perf_counter() - start

    if budget_threshold is not None and g.n * h.n > budget_threshold and budget is None:
        budget = report.lower
        logger.info(f"({G.name}, {H.name}): {g.n * h.n} product vertices, budget mode at {budget}")

    start = time.perf_counter()
    exact = bounds.exact_product_domination(g, h, budget=budget, report=report)
    if exact.status == SolveStatus.OPTIMAL and int(exact.value) > report.lower:
        smaller = domination.product_domination_number(
            g, h, budget=int(exact.value) - 1, lower_bound=report.lower, first_optimum=False
        )
        if smaller.status == SolveStatus.OPTIMAL:
            raise VerificationError("exact", "a smaller dominating set exists", {
                "g": G.name, "h": H.name, "claimed": int(exact.value), "found": int(smaller.value),
            })
    timings["exact"] = time.perf_counter() - start

    start = time.perf_counter()
    try:
        verdict = characterization.classify(g, h, cross_check=False)
    except SizeLimitError as e:
        logger.warning(f"No verdict for ({G.name}, {H.name}): {e}")
        verdict = None
    if verdict is not None:
        known = None
        if exact.status == SolveStatus.OPTIMAL:
            known = ProductClass.truncate(int(exact.value))
        elif exact.status == SolveStatus.EXCEEDS_BUDGET and budget is not None and budget >= 3:
            known = ProductClass.GE4
        if known is not None:
            verdict.cross_checked = True
            verdict.exact_value = int(exact.value) if exact.status == SolveStatus.OPTIMAL else None
            if known != verdict.product_class:
                raise VerificationError(verdict.clause, "verdict disagrees with the exact value", {
                    "g": G.name, "h": H.name, "verdict": verdict.product_class.value, "exact": known.value,
                })
    timings["verdict"] = time.perf_counter() - start

    logger.info(f"({G.name}, {H.name}): bounds [{report.lower}, {report.upper}], exact {exact.value}")
    return PairRecord(
        g_name=G.name,
        h_name=H.name,
        n_g=g.n,
        n_h=h.n,
        gamma_g=int(gamma_g),
        gamma_h=int(gamma_h),
        total_g_complement=total_g,
        total_h_complement=total_h,
        sdctd_g=sdctd_g,
        sdctd_h=sdctd_h,
        diam_g=g.diameter(),
        diam_h=h.diameter(),
        bounds=report,
        product=exact,
        verdict=verdict,
        timings=timings if include_timings else None,
    )


def _compute_worker(task: Tuple[NamedGraph, NamedGraph, Optional[int], bool, Optional[int]]) -> PairRecord:
    G, H, budget, include_timings, budget_threshold = task
    return compute_pair(G, H, budget, include_timings, budget_threshold=budget_threshold)


def _exact_worker(task: Tuple[Graph, Graph, Optional[int]]) -> SolveResult:
    G, H, budget = task
    return BoundsCalculator().exact_product_domination(G, H, budget=budget)


def _suite_worker(task: Tuple[RunConfig, DominationCalculator, str]) -> SuiteResult:
    config, domination, name = task
    suites = VerificationSuites(config, domination)
    return suites.run_suite(name, dict(suites.suites())[name])


def _izrok_hypothesis(graph: Graph) -> bool:
    """Some edge has disjoint open neighbourhoods that miss a vertex."""
    return separated_edge(graph) is not None


class ModularProductHarness:
    """Runs compute, verify and the three open-problem searches."""

    def __init__(self, config: RunConfig, domination: Optional[DominationCalculator] = None):
        """
        Initialize the harness.

        Args:
            config: Validated run configuration
            domination: Solver to use; tests inject a broken one here
        """
        self.config = config
        self.domination = domination or DominationCalculator()
        self.bounds = BoundsCalculator(self.domination)
        self.logger = logging.getLogger(__name__)

    def run(self) -> Report:
        handlers = {
            RunMode.COMPUTE: self.run_compute,
            RunMode.VERIFY: self.run_verify,
            RunMode.SEARCH_PROBLEM1: self.search_problem1,
            RunMode.SEARCH_PROBLEM2: self.search_problem2,
            RunMode.SEARCH_PROBLEM3: self.search_problem3,
        }
        return handlers[self.config.mode]()

    def _parallel(self, task_count: int) -> bool:
        return self.config.threads > 1 and task_count > 1

    def _pairs(self, graphs: List[NamedGraph]) -> List[Tuple[NamedGraph, NamedGraph]]:
        if self.config.all_pairs:
            return list(ordered_pairs(graphs, repeat=2))
        if len(graphs) % 2:
            raise GraphUsageError(
                f"compute pairs consecutive inputs and got {len(graphs)} graphs; pass --all-pairs or an even count"
            )
        return [(graphs[i], graphs[i + 1]) for i in range(0, len(graphs), 2)]

    def run_compute(self) -> Report:
        pairs = self._pairs(load_inputs(self.config.inputs))
        self.logger.info(f"Computing {len(pairs)} pair(s) with {self.config.threads} worker(s)")
        tasks = [
            (G, H, self.config.budget, self.config.include_timings, self.config.budget_threshold) for G, H in pairs
        ]

        if self._parallel(len(tasks)):
            with Pool(processes=min(self.config.threads, len(tasks))) as pool:
                records = pool.map(_compute_worker, tasks)
        else:
            records = [
                compute_pair(G, H, budget, timings, self.domination, threshold)
                for G, H, budget, timings, threshold in tasks
            ]
        return Report("compute", list(records), {"pairs": len(records)})

    def run_verify(self) -> Report:
        suites = VerificationSuites(self.config, self.domination)
        names = [name for name, _ in suites.suites()]
        if self._parallel(len(names)):
            self.logger.info(f"Running {len(names)} suites with {self.config.threads} worker(s)")
            tasks = [(self.config, self.domination, name) for name in names]
            with Pool(processes=min(self.config.threads, len(tasks))) as pool:
                results = pool.map(_suite_worker, tasks)
        else:
            results = suites.run_all()
        failures = sum(len(r.failures) for r in results)
        summary = {
            "suites": len(results),
            "checks": sum(r.checks for r in results),
            "failures": failures,
            "max_n": self.config.max_n,
            "seed": self.config.seed,
        }
        if failures:
            self.logger.warning(f"Verification finished with {failures} failure(s)")
        else:
            self.logger.info(f"Verification passed: {summary['checks']} checks")
        return Report("verify", results, summary)

    def _candidates(self, connected: bool = False) -> List[NamedGraph]:
        """Enumerated graphs up to ``max_n`` (one per isomorphism class) followed by the inputs."""
        graphs = []
        for n in range(1, self.config.max_n + 1):
            for graph in enumerate_graph_classes(n, connected=connected):
                graphs.append(NamedGraph(emit_graph6(graph), graph))
        return graphs + load_inputs(self.config.inputs)

    def _exact(self, G: Graph, H: Graph, budget: Optional[int] = None) -> SolveResult:
        return self.bounds.exact_product_domination(G, H, budget=budget)

    def _exact_all(self, tasks: List[Tuple[Graph, Graph, Optional[int]]]) -> List[SolveResult]:
        """Exact product values in task order, on the worker pool when threads > 1."""
        if self._parallel(len(tasks)):
            with Pool(processes=min(self.config.threads, len(tasks))) as pool:
                return pool.map(_exact_worker, tasks)
        return [self._exact(G, H, budget) for G, H, budget in tasks]

    def _gamma(self, graph: Graph) -> int:
        return int(self.domination.domination_number(graph).value)

    def search_problem1(self) -> Report:
        """Pairs meeting the five-set construction's hypothesis, flagged when the exact value is 5."""
        admitted = [g for g in self._candidates() if _izrok_hypothesis(g.graph)]
        pairs = list(combinations_with_replacement(admitted, 2))
        results = self._exact_all([(G.graph, H.graph, self.config.budget) for G, H in pairs])
        records = []
        for (G, H), exact in zip(pairs, results):
            value = exact.value.to_json() if exact.status == SolveStatus.OPTIMAL else None
            records.append(SearchRecord("problem1", G.name, H.name, {
                "exact": value, "status": exact.status.value,
            }, flagged=value == 5))
        hits = sum(r.flagged for r in records)
        self.logger.info(f"Problem 1: {len(records)} admitted pair(s), {hits} with value 5")
        return Report("search-problem1", records, {"admitted_pairs": len(records), "value_five": hits})

    def search_problem2(self) -> Report:
        """Excess of the product value over the larger factor value, on diameter-two pairs.

        Pairs whose value exceeds ``--budget`` have no excess and count as undecided.
        """
        admitted = [g for g in self._candidates(connected=True) if g.graph.diameter() == 2]
        pairs = list(combinations_with_replacement(admitted, 2))
        results = self._exact_all([(G.graph, H.graph, self.config.budget) for G, H in pairs])
        records = []
        for (G, H), exact in zip(pairs, results):
            gamma_g, gamma_h = self._gamma(G.graph), self._gamma(H.graph)
            value = int(exact.value) if exact.status == SolveStatus.OPTIMAL else None
            records.append(SearchRecord("problem2", G.name, H.name, {
                "gamma_g": gamma_g,
                "gamma_h": gamma_h,
                "exact": value,
                "status": exact.status.value,
                "excess": value - max(gamma_g, gamma_h) if value is not None else None,
            }))
        excesses = [r.values["excess"] for r in records if r.values["excess"] is not None]
        best = max(excesses) if excesses else None
        for record in records:
            record.flagged = best is not None and record.values["excess"] == best
        undecided = len(records) - len(excesses)
        self.logger.info(f"Problem 2: {len(records)} diameter-two pair(s), maximum excess {best}")
        return Report("search-problem2", records, {"pairs": len(records), "max_excess": best, "undecided": undecided})

    def search_problem3(self) -> Report:
        """Graphs whose square product exceeds ``gamma(G) + 1``.

        Each square is solved within ``gamma(G) + 1``, lowered to ``--budget``
        when that is smaller; exceeding a lowered budget leaves the graph
        undecided rather than flagged.
        """
        candidates = self._candidates()
        if not self.config.unrestricted:
            candidates = [g for g in candidates if g.graph.diameter() == 2]
        gammas = [self._gamma(G.graph) for G in candidates]
        budgets = [
            gamma + 1 if self.config.budget is None else min(gamma + 1, self.config.budget) for gamma in gammas
        ]
        results = self._exact_all([(G.graph, G.graph, b) for G, b in zip(candidates, budgets)])
        records = []
        undecided = 0
        for G, gamma, budget, exact in zip(candidates, gammas, budgets, results):
            exceeds = exact.status == SolveStatus.EXCEEDS_BUDGET
            if exceeds and budget < gamma + 1:
                undecided += 1
            records.append(SearchRecord("problem3", G.name, G.name, {
                "gamma": gamma,
                "diameter": G.graph.diameter().to_json(),
                "budget": budget,
                "status": exact.status.value,
                "exact": exact.value.to_json() if not exceeds else None,
            }, flagged=exceeds and budget == gamma + 1))
        hits = sum(r.flagged for r in records)
        self.logger.info(f"Problem 3: {len(records)} graph(s) scanned, {hits} above gamma + 1")
        return Report("search-problem3", records, {
            "scanned": len(records),
            "counterexamples": hits,
            "undecided": undecided,
            "diameter_filter": not self.config.unrestricted,
        })
