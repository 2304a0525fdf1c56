"""Unit tests for the branch-and-bound set cover solver."""
from itertools import combinations

from src.main.python.models.domain_models import SolveStatus
from src.main.python.services.cover_solver import (
    BranchAndBoundCoverSolver,
    CoverProblem,
    solve_cover,
)
from src.main.python.utils.bitset_utils import popcount


def brute_force(covers, universe):
    for size in range(len(covers) + 1):
        for chosen in combinations(range(len(covers)), size):
            covered = 0
            for c in chosen:
                covered |= covers[c]
            if covered & universe == universe:
                return size
    return None


class TestBranchAndBoundCoverSolver:
    """Unit tests for BranchAndBoundCoverSolver."""

    def test_small_instance(self):
        outcome = solve_cover([0b011, 0b110, 0b100], 0b111)
        assert outcome.status == SolveStatus.OPTIMAL
        assert outcome.size == 2
        assert popcount(outcome.chosen) == 2

    def test_uncoverable_element_is_infeasible(self):
        outcome = solve_cover([0b001, 0b010], 0b111)
        assert outcome.status == SolveStatus.INFEASIBLE
        assert outcome.size is None

    def test_budget_below_optimum(self):
        outcome = solve_cover([0b011, 0b110, 0b100], 0b111, budget=1)
        assert outcome.status == SolveStatus.EXCEEDS_BUDGET
        assert outcome.chosen is None

    def test_lower_bound_above_budget_returns_immediately(self):
        problem = CoverProblem(0b111, [0b111])
        outcome = BranchAndBoundCoverSolver().solve(problem, budget=1, lower_bound=2)
        assert outcome.status == SolveStatus.EXCEEDS_BUDGET
        assert outcome.nodes == 0

    def test_invalid_incumbent_is_ignored(self):
        problem = CoverProblem(0b1111, [0b0011, 0b1100, 0b0001, 0b0010, 0b0100, 0b1000])
        outcome = BranchAndBoundCoverSolver().solve(problem, incumbent=0b000100)
        assert outcome.status == SolveStatus.OPTIMAL
        assert outcome.size == 2

    def test_ties_go_to_the_first_optimum(self):
        # closed neighbourhoods of P4; greedy picks {1, 2}
        problem = CoverProblem(0b1111, [0b0011, 0b0111, 0b1110, 0b1100])
        solver = BranchAndBoundCoverSolver()
        assert solver.greedy_cover(problem) == 0b0110
        assert solver.solve(problem).chosen == 0b0101
        assert solver.solve(problem, first_optimum=False).chosen == 0b0110

    def test_supplied_incumbent_is_kept_on_ties(self):
        problem = CoverProblem(0b1111, [0b0011, 0b0111, 0b1110, 0b1100])
        outcome = BranchAndBoundCoverSolver().solve(problem, incumbent=0b1001)
        assert (outcome.size, outcome.chosen) == (2, 0b1001)

    def test_greedy_cover_covers(self):
        problem = CoverProblem(0b1111, [0b0011, 0b1100, 0b0110])
        chosen = BranchAndBoundCoverSolver.greedy_cover(problem)
        covered = 0
        for c in range(3):
            if chosen >> c & 1:
                covered |= problem.covers[c]
        assert covered == 0b1111

    def test_matches_brute_force(self, rng):
        for _ in range(60):
            width = rng.randint(1, 9)
            universe = (1 << width) - 1
            covers = [rng.getrandbits(width) for _ in range(rng.randint(1, 8))]
            expected = brute_force(covers, universe)
            outcome = solve_cover(covers, universe)
            if expected is None:
                assert outcome.status == SolveStatus.INFEASIBLE
            else:
                assert outcome.status == SolveStatus.OPTIMAL
                assert outcome.size == expected
