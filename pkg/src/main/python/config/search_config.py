"""Configuration for the modular product domination toolkit."""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


# Hard guards
MAX_VERTICES = 4096
MAX_PRODUCT_VERTICES = 4096
MAX_ISOMORPHISM_VERTICES = 12
MAX_ENUMERATION_VERTICES = 7
MAX_INDEX_SET_SIZE = 20
MAX_SUBSET_ENUMERATION_VERTICES = 20
MAX_TRIPLE_SEARCH_VERTICES = 64

# Exhaustive suite caps
MAX_PAIR_EXHAUSTIVE_N = 5
MAX_SINGLE_EXHAUSTIVE_N = 7

DEFAULT_SEED = 7

# Truncation used by the characterization cross-check
CHARACTERIZATION_CAP = 4

# Stable rule ids surfaced in reports
RULE_LOBOUND = "lobound"
RULE_COR1 = "cor1"
RULE_BASIC_SNAKE = "basic_snake"
RULE_SDCTD = "sdctd"
RULE_UNIV = "univ"
RULE_ECD = "ecd"
RULE_CASE3 = "case3"
RULE_DIAM5 = "diam5"
RULE_COR13 = "cor13"
RULE_DIAM3 = "diam3"
RULE_PROP2 = "prop2"
RULE_PROP4 = "prop4"
RULE_IZROK = "izrok"
RULE_CORNER_REMOVAL = "corner_removal"
RULE_DIAM3_NO_ECD = "cor_diam3_no_ecd"

# Reporting precedence for equal upper bounds
UPPER_RULE_ORDER = [
    RULE_UNIV,
    RULE_ECD,
    RULE_CASE3,
    RULE_DIAM5,
    RULE_SDCTD,
    RULE_PROP2,
    RULE_DIAM3,
    RULE_COR13,
    RULE_PROP4,
    RULE_IZROK,
    RULE_CORNER_REMOVAL,
    RULE_BASIC_SNAKE,
]

# Characterization clause ids
CLAUSE_ONE = "one"
CLAUSE_TWO_I = "two(i)"
CLAUSE_TWO_II = "two(ii)"
CLAUSE_DOM3_I = "dom3(i)"
CLAUSE_DOM3_II = "dom3(ii)"
CLAUSE_DOM3_III = "dom3(iii)"
CLAUSE_DOM3_IV = "dom3(iv)"
CLAUSE_GE4 = "biggertwo+no-dom3"


class RunMode(str, Enum):
    """Harness modes exposed on the command line."""
    COMPUTE = "compute"
    VERIFY = "verify"
    SEARCH_PROBLEM1 = "search-problem1"
    SEARCH_PROBLEM2 = "search-problem2"
    SEARCH_PROBLEM3 = "search-problem3"


class ReportFormat(str, Enum):
    """Report serialisations."""
    JSONL = "jsonl"
    CSV = "csv"


class RunConfig(BaseModel):
    """Validated configuration for one harness run."""

    mode: RunMode
    inputs: List[str] = Field(default_factory=list)
    max_n: int = 4
    budget: Optional[int] = None
    # product vertex count above which compute only runs in budget mode
    budget_threshold: Optional[int] = None
    threads: int = 1
    output: Optional[str] = None
    format: ReportFormat = ReportFormat.JSONL
    seed: int = DEFAULT_SEED
    all_pairs: bool = False
    unrestricted: bool = False
    include_timings: bool = False
    # Sample sizes for the randomised suites
    random_graphs: int = 1000
    random_pairs: int = 500
    random_sets: int = 1000
    random_snakes: int = 1000

    @field_validator("max_n")
    @classmethod
    def _validate_max_n(cls, value: int) -> int:
        if value < 1:
            raise ValueError("max_n must be at least 1")
        if value > MAX_ENUMERATION_VERTICES:
            raise ValueError(f"max_n must not exceed {MAX_ENUMERATION_VERTICES}")
        return value

    @field_validator("budget")
    @classmethod
    def _validate_budget(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError("budget must be non-negative")
        return value

    @field_validator("budget_threshold")
    @classmethod
    def _validate_budget_threshold(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("budget_threshold must be at least 1")
        return value

    @field_validator("threads")
    @classmethod
    def _validate_threads(cls, value: int) -> int:
        if value < 1:
            raise ValueError("threads must be at least 1")
        return value

    @field_validator("random_graphs", "random_pairs", "random_sets", "random_snakes")
    @classmethod
    def _validate_samples(cls, value: int) -> int:
        if value < 0:
            raise ValueError("sample sizes must be non-negative")
        return value

    @model_validator(mode="after")
    def _validate_mode_caps(self) -> "RunConfig":
        if self.mode == RunMode.COMPUTE and not self.inputs:
            raise ValueError("compute mode needs at least one input")
        return self

    @property
    def pair_max_n(self) -> int:
        """Cap used by pair-exhaustive suites."""
        return min(self.max_n, MAX_PAIR_EXHAUSTIVE_N)

    @property
    def single_max_n(self) -> int:
        """Cap used by single-graph exhaustive suites."""
        return min(self.max_n, MAX_SINGLE_EXHAUSTIVE_N)
