"""Unit tests for the run configuration."""
import pytest
from pydantic import ValidationError

from src.main.python.config.search_config import (
    DEFAULT_SEED,
    MAX_PAIR_EXHAUSTIVE_N,
    ReportFormat,
    RunConfig,
    RunMode,
)


class TestRunConfig:
    """Unit tests for RunConfig validation."""

    def test_defaults(self):
        config = RunConfig(mode=RunMode.VERIFY)
        assert config.max_n == 4
        assert config.seed == DEFAULT_SEED
        assert config.format == ReportFormat.JSONL
        assert config.threads == 1
        assert config.budget is None

    def test_caps(self):
        config = RunConfig(mode=RunMode.VERIFY, max_n=7)
        assert config.pair_max_n == MAX_PAIR_EXHAUSTIVE_N
        assert config.single_max_n == 7
        assert RunConfig(mode=RunMode.VERIFY, max_n=3).pair_max_n == 3

    @pytest.mark.parametrize("options", [
        {"max_n": 0},
        {"max_n": 8},
        {"budget": -1},
        {"threads": 0},
        {"budget_threshold": 0},
        {"random_pairs": -5},
    ])
    def test_invalid_values(self, options):
        with pytest.raises(ValidationError):
            RunConfig(mode=RunMode.VERIFY, **options)

    def test_compute_needs_inputs(self):
        with pytest.raises(ValidationError):
            RunConfig(mode=RunMode.COMPUTE)
        assert RunConfig(mode=RunMode.COMPUTE, inputs=["path:4", "path:4"]).inputs == ["path:4", "path:4"]

    def test_modes_parse_from_strings(self):
        assert RunConfig(mode="search-problem2", format="csv").mode == RunMode.SEARCH_PROBLEM2
