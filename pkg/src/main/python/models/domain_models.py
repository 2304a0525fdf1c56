"""Domain models for modular product domination."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..interfaces.errors import GraphUsageError, VerificationError
from .graph import ExtendedNat, Graph, VertexSet


class EdgeKind(Enum):
    """Which of the three modular product edge sets an edge belongs to."""
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    CODIRECT = "codirect"
    NONE = "none"


class SolveStatus(Enum):
    """Outcome of an exact search."""
    OPTIMAL = "optimal"
    EXCEEDS_BUDGET = "exceeds_budget"
    INFEASIBLE = "infeasible"


class CornerKind(Enum):
    """Corner classification of a snake entry."""
    G_CORNER = "g_corner"
    H_CORNER = "h_corner"
    NONE = "none"


class ProductClass(Enum):
    """Truncated value class of the product domination number."""
    EQ1 = "1"
    EQ2 = "2"
    EQ3 = "3"
    GE4 = ">=4"

    @classmethod
    def truncate(cls, value: Optional[int]) -> "ProductClass":
        """Class of an exact value; ``None`` (over budget) counts as at least four."""
        return {1: cls.EQ1, 2: cls.EQ2, 3: cls.EQ3}.get(value, cls.GE4)


class FamilyKind(Enum):
    """Named graph families."""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "kbip"
    COMPLETE_BIPARTITE_MINUS_EDGE = "kbip-minus"
    CUBE = "cube"
    CUBE_MINUS_VERTEX = "cube-minus"
    PETERSEN = "petersen"
    COMPLETE_MINUS_MATCHING = "kminusm"
    COMPLEMENT = "complement"


@dataclass(frozen=True, order=True)
class ProductVertex:
    """Vertex ``(g, h)`` of a product; flat index is ``g * n_h + h``."""

    g: int
    h: int

    def __post_init__(self):
        if self.g < 0 or self.h < 0:
            raise GraphUsageError(f"product vertex coordinates must be non-negative, got ({self.g}, {self.h})")

    def flat(self, n_h: int) -> int:
        return self.g * n_h + self.h

    @classmethod
    def from_flat(cls, index: int, n_h: int) -> "ProductVertex":
        return cls(index // n_h, index % n_h)

    def swapped(self) -> "ProductVertex":
        return ProductVertex(self.h, self.g)

    def to_list(self) -> List[int]:
        return [self.g, self.h]


@dataclass(frozen=True)
class FamilySpec:
    """Named family with its parameters; ``inner`` is set for complements."""

    kind: FamilyKind
    params: Tuple[int, ...] = ()
    inner: Optional["FamilySpec"] = None

    def to_text(self) -> str:
        if self.kind == FamilyKind.COMPLEMENT:
            return f"complement:{self.inner.to_text()}"
        return ":".join([self.kind.value] + [str(p) for p in self.params])

    def __str__(self) -> str:
        return self.to_text()


@dataclass
class SolveResult:
    """Result of an exact domination computation.

    Attributes:
        value: Optimal size, or infinity when no set exists
        witness: An optimal set, absent for budget-exceeded or infinite results
        nodes_explored: Search nodes visited
        status: How the search ended
    """

    value: ExtendedNat
    witness: Optional[VertexSet]
    nodes_explored: int
    status: SolveStatus

    def product_witness(self, n_h: int) -> Optional[List[ProductVertex]]:
        """Decode a flat product witness into coordinates."""
        if self.witness is None:
            return None
        return [ProductVertex.from_flat(index, n_h) for index in self.witness]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value.to_json(),
            "witness": self.witness.to_list() if self.witness is not None else None,
            "nodes_explored": self.nodes_explored,
            "status": self.status.value,
        }


@dataclass(frozen=True)
class IndexSubset:
    """Subset ``I`` of ``{1..q}`` used by the characterization."""

    q: int
    members: FrozenSet[int]

    def __post_init__(self):
        if self.q < 0:
            raise GraphUsageError(f"index range must be non-negative, got {self.q}")
        for i in self.members:
            if not 1 <= i <= self.q:
                raise GraphUsageError(f"index {i} outside 1..{self.q}")

    @classmethod
    def of(cls, q: int, members: Sequence[int]) -> "IndexSubset":
        return cls(q, frozenset(members))

    @classmethod
    def from_mask(cls, q: int, mask: int) -> "IndexSubset":
        """Bit ``i`` of ``mask`` stands for index ``i + 1``."""
        return cls(q, frozenset(i + 1 for i in range(q) if mask >> i & 1))

    @property
    def mask(self) -> int:
        result = 0
        for i in self.members:
            result |= 1 << (i - 1)
        return result

    def complement(self) -> "IndexSubset":
        return IndexSubset(self.q, frozenset(range(1, self.q + 1)) - self.members)


@dataclass(frozen=True)
class Snake:
    """Ordered product vertices where consecutive entries share a coordinate."""

    entries: Tuple[ProductVertex, ...]

    def __post_init__(self):
        if not self.entries:
            raise GraphUsageError("a snake needs at least one entry")
        for a, b in zip(self.entries, self.entries[1:]):
            if a.g != b.g and a.h != b.h:
                raise GraphUsageError(f"entries {a.to_list()} and {b.to_list()} share no coordinate")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass
class BoundFragment:
    """Upper bound produced by one rule, with the set that proves it."""

    value: int
    rule: str
    witness: List[ProductVertex]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "rule": self.rule,
            "witness": [v.to_list() for v in self.witness],
        }


@dataclass
class BoundReport:
    """Lower and upper bounds with the rules that produced them."""

    lower: int
    lower_rule: str
    upper: int
    upper_rule: str
    upper_witness: List[ProductVertex] = field(default_factory=list)
    fragments: List[BoundFragment] = field(default_factory=list)

    def __post_init__(self):
        if self.lower > self.upper:
            raise VerificationError("bounds", f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def gap(self) -> int:
        return self.upper - self.lower

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lower": self.lower,
            "lower_rule": self.lower_rule,
            "upper": self.upper,
            "upper_rule": self.upper_rule,
            "upper_witness": [v.to_list() for v in self.upper_witness],
        }


@dataclass
class CharacterizationVerdict:
    """Class of the product domination number and the clause that decided it."""

    product_class: ProductClass
    clause: str
    witness: Dict[str, Any] = field(default_factory=dict)
    cross_checked: bool = False
    exact_value: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.product_class.value,
            "clause": self.clause,
            "witness": self.witness,
            "cross_checked": self.cross_checked,
            "exact_value": self.exact_value,
        }


@dataclass
class PairRecord:
    """One row of a compute report."""

    g_name: str
    h_name: str
    n_g: int
    n_h: int
    gamma_g: int
    gamma_h: int
    total_g_complement: ExtendedNat
    total_h_complement: ExtendedNat
    sdctd_g: ExtendedNat
    sdctd_h: ExtendedNat
    diam_g: ExtendedNat
    diam_h: ExtendedNat
    bounds: BoundReport
    product: Optional[SolveResult]
    verdict: Optional[CharacterizationVerdict]
    timings: Optional[Dict[str, float]] = None

    def to_dict(self) -> Dict[str, Any]:
        record = {
            "record": "pair",
            "g": self.g_name,
            "h": self.h_name,
            "n_g": self.n_g,
            "n_h": self.n_h,
            "gamma_g": self.gamma_g,
            "gamma_h": self.gamma_h,
            "gamma_t_g_complement": self.total_g_complement.to_json(),
            "gamma_t_h_complement": self.total_h_complement.to_json(),
            "sdctd_g": self.sdctd_g.to_json(),
            "sdctd_h": self.sdctd_h.to_json(),
            "diam_g": self.diam_g.to_json(),
            "diam_h": self.diam_h.to_json(),
            "bounds": self.bounds.to_dict(),
            "product": self.product.to_dict() if self.product is not None else None,
            "verdict": self.verdict.to_dict() if self.verdict is not None else None,
        }
        if self.timings is not None:
            record["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return record


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    checks: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str, **details: Any) -> None:
        self.failures.append({"message": message, **details})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "record": "suite",
            "suite": self.name,
            "checks": self.checks,
            "failures": self.failures,
            "passed": self.passed,
        }


@dataclass
class SearchRecord:
    """One row of an open-problem search report."""

    problem: str
    g_name: str
    h_name: str
    values: Dict[str, Any]
    flagged: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "record": "search",
            "problem": self.problem,
            "g": self.g_name,
            "h": self.h_name,
            "flagged": self.flagged,
            **self.values,
        }


@dataclass(frozen=True)
class NamedGraph:
    """A graph together with the label used for it in reports."""

    name: str
    graph: Graph


@dataclass
class Report:
    """Records of one harness run plus a summary.

    Records are ``PairRecord``, ``SuiteResult`` or ``SearchRecord`` objects
    in input order.
    """

    mode: str
    records: List[Any] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return sum(len(r.failures) for r in self.records if isinstance(r, SuiteResult))

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def summary_record(self) -> Dict[str, Any]:
        return {"record": "summary", "mode": self.mode, "records": len(self.records), **self.summary}

    def to_dicts(self) -> List[Dict[str, Any]]:
        return [r.to_dict() for r in self.records] + [self.summary_record()]
