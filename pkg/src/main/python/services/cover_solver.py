"""Exact minimum set cover by branch and bound over bitsets.

Every domination-type invariant in this package reduces to covering a
universe of elements with candidate sets:

* ``gamma``: element ``v`` is covered by the candidates in ``N[v]``;
* ``gamma_t``: by the candidates in ``N(v)``;
* the SDCTD number: two elements per vertex, one per constraint family;
* the product domination number: the closed product neighbourhoods.

The solver branches on the uncovered element with the fewest remaining
coverers and tries those coverers in ascending index order. In the branch
for a coverer, every earlier sibling is forbidden, so each subset is
visited at most once.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..models.domain_models import SolveStatus
from ..utils.bitset_utils import iter_bits, popcount


@dataclass
class CoverProblem:
    """A set cover instance.

    Attributes:
        universe: Mask of the elements that must be covered
        covers: ``covers[c]`` is the mask of elements covered by candidate ``c``
        coverers: ``coverers[e]`` is the mask of candidates covering element ``e``
    """

    universe: int
    covers: Sequence[int]
    coverers: Sequence[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.coverers:
            width = self.universe.bit_length()
            transpose = [0] * width
            for c, cover in enumerate(self.covers):
                for e in iter_bits(cover & self.universe):
                    transpose[e] |= 1 << c
            self.coverers = transpose


@dataclass
class CoverOutcome:
    """Result of a cover search; ``chosen`` is a candidate mask."""

    size: Optional[int]
    chosen: Optional[int]
    nodes: int
    status: SolveStatus


class BranchAndBoundCoverSolver:
    """Exact minimum cover solver with greedy incumbent and packing bound."""

    def __init__(self):
        """Initialize the cover solver."""
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def greedy_cover(problem: CoverProblem, allowed: int = -1) -> Optional[int]:
        """Largest-gain greedy cover; ties go to the lowest candidate index."""
        uncovered = problem.universe
        chosen = 0
        while uncovered:
            best, best_gain = -1, 0
            for c in iter_bits(_candidates_for(problem, uncovered) & allowed):
                gain = popcount(problem.covers[c] & uncovered)
                if gain > best_gain:
                    best, best_gain = c, gain
            if best < 0:
                return None
            chosen |= 1 << best
            uncovered &= ~problem.covers[best]
        return chosen

    def solve(
        self,
        problem: CoverProblem,
        budget: Optional[int] = None,
        lower_bound: int = 0,
        incumbent: Optional[int] = None,
        first_optimum: bool = True,
    ) -> CoverOutcome:
        """
        Find a minimum cover.

        Without a supplied incumbent the witness is the first optimum in
        branch order. A supplied incumbent is kept when nothing smaller exists.

        Args:
            problem: The cover instance
            budget: When set, only covers of size at most ``budget`` are sought
            lower_bound: A known lower bound; the search stops once it is met
            incumbent: A known cover (candidate mask) to start from
            first_optimum: When False, the greedy cover may be returned on ties

        Returns:
            The optimum and a witness, or a budget/infeasibility verdict
        """
        self._problem = problem
        self._nodes = 0
        self._root_bound = lower_bound

        for e in iter_bits(problem.universe):
            if e >= len(problem.coverers) or problem.coverers[e] == 0:
                self.logger.debug(f"Element {e} has no coverer, instance infeasible")
                return CoverOutcome(None, None, 0, SolveStatus.INFEASIBLE)
        if budget is not None and lower_bound > budget:
            return CoverOutcome(None, None, 0, SolveStatus.EXCEEDS_BUDGET)

        greedy = self.greedy_cover(problem)
        if first_optimum:
            # greedy only bounds the search; branching must find the witness
            self._best, self._best_size = None, popcount(greedy) + 1
        else:
            self._best, self._best_size = greedy, popcount(greedy)
        if incumbent is not None:
            if not _covers_all(problem, incumbent):
                self.logger.warning("Supplied incumbent does not cover the universe, ignoring it")
            elif popcount(incumbent) < self._best_size:
                self._best, self._best_size = incumbent, popcount(incumbent)
        if budget is not None and budget < self._best_size:
            # Search only for covers within the budget
            self._best = None
            self._best_size = budget + 1
        self.logger.debug(
            f"Cover search: {popcount(problem.universe)} elements, {len(problem.covers)} candidates, "
            f"incumbent {self._best_size}, root bound {lower_bound}"
        )

        if self._best is None or self._best_size > max(lower_bound, 0):
            self._root_bound = max(self._root_bound, self._bound(problem.universe, -1))
            if self._best is None or self._best_size > self._root_bound:
                self._branch(problem.universe, -1, 0, 0)

        if self._best is None:
            return CoverOutcome(None, None, self._nodes, SolveStatus.EXCEEDS_BUDGET)
        self.logger.debug(f"Cover search finished: size {self._best_size} after {self._nodes} nodes")
        return CoverOutcome(self._best_size, self._best, self._nodes, SolveStatus.OPTIMAL)

    def _finished(self) -> bool:
        return self._best is not None and self._best_size <= self._root_bound

    def _bound(self, uncovered: int, allowed: int) -> int:
        """Lower bound on the candidates still needed to cover ``uncovered``."""
        problem = self._problem
        packing = 0
        used = 0
        for e in iter_bits(uncovered):
            options = problem.coverers[e] & allowed
            if options == 0:
                return len(problem.covers) + 1
            if options & used == 0:
                packing += 1
                used |= options
        max_gain = 0
        for c in iter_bits(_candidates_for(problem, uncovered) & allowed):
            max_gain = max(max_gain, popcount(problem.covers[c] & uncovered))
        ceiling = -(-popcount(uncovered) // max_gain) if max_gain else len(problem.covers) + 1
        return max(packing, ceiling)

    def _branch(self, uncovered: int, allowed: int, chosen: int, depth: int) -> None:
        self._nodes += 1
        if uncovered == 0:
            if depth < self._best_size:
                self._best = chosen
                self._best_size = depth
            return
        if depth + self._bound(uncovered, allowed) >= self._best_size:
            return

        problem = self._problem
        pivot_options = None
        pivot_count = 0
        for e in iter_bits(uncovered):
            options = problem.coverers[e] & allowed
            count = popcount(options)
            if pivot_options is None or count < pivot_count:
                pivot_options, pivot_count = options, count
                if count <= 1:
                    break

        remaining = allowed
        for c in iter_bits(pivot_options):
            remaining &= ~(1 << c)
            self._branch(uncovered & ~problem.covers[c], remaining, chosen | (1 << c), depth + 1)
            if self._finished():
                return


def _candidates_for(problem: CoverProblem, uncovered: int) -> int:
    candidates = 0
    for e in iter_bits(uncovered):
        candidates |= problem.coverers[e]
    return candidates


def _covers_all(problem: CoverProblem, chosen: int) -> bool:
    covered = 0
    for c in iter_bits(chosen):
        covered |= problem.covers[c]
    return covered & problem.universe == problem.universe


def solve_cover(covers: List[int], universe: int, budget: Optional[int] = None) -> CoverOutcome:
    """Convenience wrapper for one-off instances."""
    return BranchAndBoundCoverSolver().solve(CoverProblem(universe, covers), budget=budget)
