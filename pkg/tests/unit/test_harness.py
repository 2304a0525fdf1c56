"""Unit tests for the batch harness and the property suites."""
import os
import tempfile

import pytest

from src.main.python.config.search_config import RunConfig, RunMode
from src.main.python.interfaces.errors import FamilySpecError, GraphUsageError, VerificationError
from src.main.python.models.domain_models import NamedGraph, ProductClass, SolveResult, SolveStatus
from src.main.python.services.domination import DominationCalculator
from src.main.python.services.harness import ModularProductHarness, compute_pair, load_inputs
from src.main.python.services.report_generator import JSONLinesReportGenerator
from src.main.python.services.verification_suites import VerificationSuites, naive_product_domination
from tests.conftest import family


class OffByOneDomination(DominationCalculator):
    """Reports one more than the true product domination number."""

    def product_domination_number(self, G, H, budget=None, lower_bound=0, incumbent=None, first_optimum=True):
        true = super().product_domination_number(G, H)
        return SolveResult(true.value + 1, None, true.nodes_explored, SolveStatus.OPTIMAL)


class TestLoadInputs:
    """Unit tests for resolving input tokens."""

    def test_family_tokens(self):
        graphs = load_inputs(["path:3", "Petersen"])
        assert [g.name for g in graphs] == ["path:3", "petersen"]
        assert graphs[1].graph.n == 10

    def test_graph6_file(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, "in.g6")
            with open(path, "w") as handle:
                handle.write("A_\nBw\n")
            graphs = load_inputs([path, "cycle:4"])
        assert [g.graph.n for g in graphs] == [2, 3, 4]

    def test_unknown_token(self):
        with pytest.raises(FamilySpecError):
            load_inputs(["no-such-thing:3"])


class TestComputePair:
    """Unit tests for a single compute row."""

    def test_p4_squared(self):
        record = compute_pair(NamedGraph("P4", family("path:4")), NamedGraph("P4", family("path:4")))
        data = record.to_dict()
        assert data["gamma_g"] == 2
        assert data["diam_g"] == 3
        assert data["gamma_t_g_complement"] == 2
        assert data["bounds"]["upper_rule"] == "ecd"
        assert data["product"]["value"] == 2
        assert data["verdict"]["class"] == ProductClass.EQ2.value
        assert data["verdict"]["cross_checked"] is True
        assert "timings" not in data

    def test_universal_vertex_gives_infinite_sdctd(self):
        record = compute_pair(NamedGraph("K3", family("complete:3")), NamedGraph("C4", family("cycle:4")))
        data = record.to_dict()
        assert data["sdctd_g"] == "inf"
        assert data["gamma_t_g_complement"] == "inf"
        assert data["product"]["value"] == 2

    def test_timings_are_optional(self):
        record = compute_pair(NamedGraph("P3", family("path:3")), NamedGraph("P3", family("path:3")),
                              include_timings=True)
        assert set(record.to_dict()["timings"]) == {"factors", "bounds", "exact", "verdict"}

    def test_budget_below_value(self):
        record = compute_pair(NamedGraph("C4", family("cycle:4")), NamedGraph("C4", family("cycle:4")), budget=2)
        assert record.product.status == SolveStatus.EXCEEDS_BUDGET
        assert record.verdict.product_class == ProductClass.EQ3

    def test_budget_threshold_searches_up_to_the_lower_bound(self):
        c4 = NamedGraph("C4", family("cycle:4"))
        record = compute_pair(c4, c4, budget_threshold=10)
        assert record.bounds.lower == 2
        assert record.product.status == SolveStatus.EXCEEDS_BUDGET
        assert not record.verdict.cross_checked
        small = compute_pair(c4, c4, budget_threshold=16)
        assert small.product.status == SolveStatus.OPTIMAL

    def test_broken_solver_is_caught(self):
        with pytest.raises(VerificationError):
            compute_pair(NamedGraph("P4", family("path:4")), NamedGraph("P4", family("path:4")),
                         domination=OffByOneDomination())


class TestModularProductHarness:
    """Unit tests for the harness modes."""

    def test_compute_pairs_consecutive_inputs(self):
        config = RunConfig(mode=RunMode.COMPUTE, inputs=["path:4", "path:4", "complete:3", "cycle:5"])
        report = ModularProductHarness(config).run()
        assert report.mode == "compute"
        assert [(r.g_name, r.h_name) for r in report.records] == [("path:4", "path:4"), ("complete:3", "cycle:5")]
        assert report.summary == {"pairs": 2}
        assert report.exit_code == 0

    def test_compute_all_pairs(self):
        config = RunConfig(mode=RunMode.COMPUTE, inputs=["path:3", "cycle:4", "path:2"], all_pairs=True)
        assert len(ModularProductHarness(config).run().records) == 9

    def test_compute_rejects_odd_input_count(self):
        config = RunConfig(mode=RunMode.COMPUTE, inputs=["path:3"])
        with pytest.raises(GraphUsageError):
            ModularProductHarness(config).run()

    def test_compute_is_independent_of_threads(self):
        inputs = ["path:4", "cycle:5", "petersen", "complete:2", "cube", "path:5"]
        serial = ModularProductHarness(RunConfig(mode=RunMode.COMPUTE, inputs=inputs)).run()
        parallel = ModularProductHarness(RunConfig(mode=RunMode.COMPUTE, inputs=inputs, threads=3)).run()
        generator = JSONLinesReportGenerator()
        assert generator.render(serial) == generator.render(parallel)

    def test_verify_is_deterministic(self, small_verify_config):
        generator = JSONLinesReportGenerator()
        first = ModularProductHarness(small_verify_config).run()
        second = ModularProductHarness(small_verify_config).run()
        assert generator.render(first) == generator.render(second)
        assert first.exit_code == 0
        assert first.summary["failures"] == 0
        assert first.summary["suites"] == len(first.records)

    def test_search_problem3(self):
        report = ModularProductHarness(RunConfig(mode=RunMode.SEARCH_PROBLEM3, max_n=3)).run()
        assert report.summary == {"scanned": 1, "counterexamples": 0, "undecided": 0, "diameter_filter": True}
        [record] = report.records
        assert record.values["gamma"] == 1
        assert record.values["exact"] == 1

    def test_search_problem3_unrestricted(self):
        config = RunConfig(mode=RunMode.SEARCH_PROBLEM3, max_n=3, unrestricted=True)
        report = ModularProductHarness(config).run()
        assert report.summary["scanned"] == 7
        assert report.summary["diameter_filter"] is False

    def test_search_problem2(self):
        report = ModularProductHarness(RunConfig(mode=RunMode.SEARCH_PROBLEM2, max_n=3)).run()
        assert report.summary == {"pairs": 1, "max_excess": 0, "undecided": 0}
        assert report.records[0].flagged

    def test_search_problem2_includes_inputs(self):
        config = RunConfig(mode=RunMode.SEARCH_PROBLEM2, max_n=3, inputs=["cycle:4"])
        report = ModularProductHarness(config).run()
        c4_row = [r for r in report.records if r.g_name == "cycle:4" and r.h_name == "cycle:4"]
        assert c4_row[0].values["exact"] == 3
        assert c4_row[0].values["excess"] == 1

    def test_search_problem2_budget_leaves_pairs_undecided(self):
        config = RunConfig(mode=RunMode.SEARCH_PROBLEM2, max_n=3, inputs=["cycle:4"], budget=2)
        report = ModularProductHarness(config).run()
        assert report.summary == {"pairs": 3, "max_excess": 0, "undecided": 1}
        c4_row = report.records[-1]
        assert (c4_row.g_name, c4_row.h_name) == ("cycle:4", "cycle:4")
        assert c4_row.values["exact"] is None and c4_row.values["excess"] is None
        assert c4_row.values["status"] == SolveStatus.EXCEEDS_BUDGET.value
        assert not c4_row.flagged

    def test_search_problem3_budget_below_gamma_plus_one(self):
        config = RunConfig(mode=RunMode.SEARCH_PROBLEM3, max_n=3, unrestricted=True, budget=1)
        report = ModularProductHarness(config).run()
        exceeded = [r for r in report.records if r.values["status"] == SolveStatus.EXCEEDS_BUDGET.value]
        assert exceeded
        assert report.summary["undecided"] == len(exceeded)
        assert report.summary["counterexamples"] == 0
        assert all(r.values["budget"] == 1 for r in report.records)

    @pytest.mark.parametrize("mode, extra", [
        (RunMode.SEARCH_PROBLEM1, {"max_n": 4}),
        (RunMode.SEARCH_PROBLEM2, {"max_n": 4, "inputs": ["cycle:4", "cycle:5"]}),
        (RunMode.SEARCH_PROBLEM3, {"max_n": 4, "unrestricted": True}),
    ])
    def test_searches_are_independent_of_threads(self, mode, extra):
        serial = ModularProductHarness(RunConfig(mode=mode, **extra)).run()
        parallel = ModularProductHarness(RunConfig(mode=mode, threads=3, **extra)).run()
        generator = JSONLinesReportGenerator()
        assert generator.render(serial) == generator.render(parallel)

    def test_verify_is_independent_of_threads(self, small_verify_config):
        parallel_config = small_verify_config.model_copy(update={"threads": 3})
        serial = ModularProductHarness(small_verify_config).run()
        parallel = ModularProductHarness(parallel_config).run()
        generator = JSONLinesReportGenerator()
        assert generator.render(serial) == generator.render(parallel)

    def test_search_problem1(self):
        report = ModularProductHarness(RunConfig(mode=RunMode.SEARCH_PROBLEM1, max_n=4)).run()
        assert report.records
        assert report.summary["admitted_pairs"] == len(report.records)
        for record in report.records:
            assert record.flagged == (record.values["exact"] == 5)


class TestVerificationSuites:
    """Unit tests for the property suites."""

    def test_suite_names_are_unique(self, small_verify_config):
        names = [name for name, _ in VerificationSuites(small_verify_config).suites()]
        assert len(names) == len(set(names)) == 25

    def test_naive_solver(self, p4, c4):
        assert naive_product_domination(p4, p4)[0] == 2
        assert naive_product_domination(c4, c4)[0] == 3

    def test_broken_solver_fails_the_oracle(self, small_verify_config):
        suites = VerificationSuites(small_verify_config, OffByOneDomination())
        result = suites.run_suite("product_oracle", suites.check_product_oracle)
        assert result.checks > 0
        assert not result.passed
        assert len(result.failures) == result.checks
        assert "g" in result.failures[0] and "h" in result.failures[0]

    def test_pair_population_is_exhaustive(self, small_verify_config):
        pairs = VerificationSuites(small_verify_config).pair_population()
        # 1 + 2 + 8 labelled graphs on at most three vertices
        assert len(pairs) == 11 * 11

    def test_diameter3_construction_covers_every_class_pair(self):
        suites = VerificationSuites(RunConfig(mode=RunMode.VERIFY, max_n=4))
        factors = suites.diameter3_factors()
        # P4 and the eight disconnected classes on at most four vertices
        assert len(factors) == 9
        assert all(G.diameter() >= 3 for G in factors)
        result = suites.run_suite("diameter3_construction", suites.check_diameter3_construction)
        assert result.checks == 81
        assert result.passed
