"""Performance tests for the exact solvers and the batch harness."""
import gc
import time

import psutil
import pytest

from src.main.python.config.search_config import RunConfig, RunMode
from src.main.python.services.domination import DominationCalculator
from src.main.python.services.families import enumerate_graph_classes
from src.main.python.services.harness import ModularProductHarness
from tests.conftest import family

pytestmark = [pytest.mark.system, pytest.mark.slow]


def rss_mb(process: psutil.Process) -> float:
    return process.memory_info().rss / 1024 / 1024


class TestPerformance:
    """Time and memory ceilings for representative workloads."""

    def test_product_solver_does_not_materialise_the_product(self, petersen):
        process = psutil.Process()
        gc.collect()
        start_memory = rss_mb(process)
        start_time = time.time()

        result = DominationCalculator().product_domination_number(family("cycle:10"), petersen)

        elapsed = time.time() - start_time
        grown = rss_mb(process) - start_memory
        print(f"C10<>Petersen: {elapsed:.2f}s, {result.nodes_explored} nodes, {grown:.1f} MB")
        assert int(result.value) == 4
        assert elapsed < 600
        assert grown < 100

    def test_seven_vertex_classes(self):
        start_time = time.time()
        classes = enumerate_graph_classes(7)
        elapsed = time.time() - start_time
        print(f"Seven-vertex classes: {len(classes)} in {elapsed:.2f}s")
        assert len(classes) == 1044
        assert len(enumerate_graph_classes(7, connected=True)) == 853
        assert elapsed < 300

    def test_parallel_compute_matches_serial_and_stays_bounded(self):
        inputs = ["petersen", "path:8", "cycle:9", "cube", "kbip:3:4", "path:6"] * 2
        process = psutil.Process()
        gc.collect()
        start_memory = rss_mb(process)

        serial = ModularProductHarness(RunConfig(mode=RunMode.COMPUTE, inputs=inputs)).run()
        parallel = ModularProductHarness(RunConfig(mode=RunMode.COMPUTE, inputs=inputs, threads=4)).run()

        assert [r.to_dict() for r in serial.records] == [r.to_dict() for r in parallel.records]
        assert rss_mb(process) - start_memory < 200
