"""Graph model backed by per-vertex adjacency bitsets."""
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from ..config.search_config import MAX_VERTICES
from ..interfaces.errors import GraphUsageError, SizeLimitError
from ..utils.bitset_utils import full_mask, iter_bits, mask_from, popcount


@total_ordering
@dataclass(frozen=True)
class ExtendedNat:
    """Natural number extended with infinity (``value is None``)."""

    value: Optional[int]

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise GraphUsageError(f"ExtendedNat must be non-negative, got {self.value}")

    @classmethod
    def of(cls, value: int) -> "ExtendedNat":
        return cls(value)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __int__(self) -> int:
        if self.value is None:
            raise GraphUsageError("infinity has no integer value")
        return self.value

    @staticmethod
    def _coerce(other: Union["ExtendedNat", int]) -> "ExtendedNat":
        if isinstance(other, ExtendedNat):
            return other
        if isinstance(other, int):
            return ExtendedNat(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(("ExtendedNat", self.value))

    def __add__(self, other) -> "ExtendedNat":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.value is None or other.value is None:
            return INFINITY
        return ExtendedNat(self.value + other.value)

    __radd__ = __add__

    def to_json(self) -> Union[int, str]:
        return "inf" if self.value is None else self.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITY = ExtendedNat(None)


@dataclass(frozen=True)
class VertexSet:
    """Subset of ``{0..n-1}`` stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise GraphUsageError(f"VertexSet bits {self.bits:#x} exceed universe of size {self.n}")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise GraphUsageError(f"vertex {v} out of range for n={n}")
        return cls(mask_from(vertices), n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise GraphUsageError(f"VertexSet universes differ: {self.n} vs {other.n}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self) -> "VertexSet":
        return VertexSet(full_mask(self.n) & ~self.bits, self.n)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def to_list(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask. The
    constructor rejects loops, asymmetric rows and out-of-range bits, so any
    ``Graph`` instance is a valid simple graph.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphUsageError(f"graph must have at least one vertex, got n={self.n}")
        if self.n > MAX_VERTICES:
            raise SizeLimitError("vertex count", MAX_VERTICES, self.n)
        if len(self.adj) != self.n:
            raise GraphUsageError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise GraphUsageError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphUsageError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphUsageError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges are merged."""
        if n < 1:
            raise GraphUsageError(f"graph must have at least one vertex, got n={n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphUsageError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphUsageError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple([0] * n))

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def closed_rows(self) -> Tuple[int, ...]:
        """Closed neighbourhood masks, one per vertex."""
        return tuple(row | (1 << v) for v, row in enumerate(self.adj))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphUsageError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @cached_property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.closed_rows[v], self.n)

    def open_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.adj[v], self.n)

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def _bfs_layers(self, source: int) -> List[int]:
        """Distances from ``source``; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        visited = 1 << source
        frontier = visited
        depth = 0
        while frontier:
            depth += 1
            reach = 0
            for v in iter_bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~visited
            visited |= frontier
            for v in iter_bits(frontier):
                dist[v] = depth
        return dist

    @cached_property
    def distance_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self._bfs_layers(v)) for v in range(self.n))

    def distance(self, u: int, v: int) -> ExtendedNat:
        self._check_vertex(u)
        self._check_vertex(v)
        d = self.distance_matrix[u][v]
        return INFINITY if d < 0 else ExtendedNat(d)

    @cached_property
    def _diameter(self) -> ExtendedNat:
        best = 0
        for row in self.distance_matrix:
            if -1 in row:
                return INFINITY
            best = max(best, max(row))
        return ExtendedNat(best)

    def diameter(self) -> ExtendedNat:
        """Largest distance; infinite for disconnected graphs, 0 for ``K1``."""
        return self._diameter

    def is_connected(self) -> bool:
        return self._diameter.is_finite

    def has_universal_vertex(self) -> Optional[int]:
        """Lowest-index vertex adjacent to every other vertex, if any."""
        for v, row in enumerate(self.closed_rows):
            if row == self.full:
                return v
        return None

    def private_neighbors(self, v: int, dominating: VertexSet) -> VertexSet:
        """Vertices of ``N[v]`` not closed-dominated by ``dominating`` minus ``v``."""
        self._check_vertex(v)
        if dominating.n != self.n:
            raise GraphUsageError(f"set universe {dominating.n} does not match n={self.n}")
        if v not in dominating:
            raise GraphUsageError(f"vertex {v} is not in the dominating set")
        others = 0
        for u in iter_bits(dominating.bits & ~(1 << v)):
            others |= self.closed_rows[u]
        return VertexSet(self.closed_rows[v] & ~others, self.n)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled in ascending order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_from(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(keep), tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"
