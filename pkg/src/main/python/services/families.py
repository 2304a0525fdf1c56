"""Generators for the named graph families and for exhaustive enumeration.

Labelling conventions:

* paths and cycles use consecutive vertices ``0..n-1``;
* ``star:n`` is ``K_{1,n}`` with the centre at vertex 0;
* ``kbip:m:n`` puts the first part on ``0..m-1`` and the second on
  ``m..m+n-1``; ``kbip-minus`` additionally deletes the edge ``0 - m``;
* ``cube`` labels ``Q3`` by 3-bit strings, ``cube-minus`` deletes vertex 7;
* ``kminusm:k`` is ``K_{2k}`` minus the matching ``{2i, 2i+1}``;
* ``petersen`` has the outer 5-cycle on ``0..4``, the inner pentagram on
  ``5..9`` (``5+j ~ 5+(j+-2 mod 5)``) and spokes ``i ~ i+5``. In the usual
  textbook labelling ``x_i`` is vertex ``i-1`` and ``y_i`` is vertex ``i+4``.
"""
import logging
import random
from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Tuple

from ..config.search_config import MAX_ENUMERATION_VERTICES, MAX_VERTICES
from ..interfaces.errors import FamilySpecError, GraphUsageError, SizeLimitError
from ..models.domain_models import FamilyKind, FamilySpec
from ..models.graph import Graph
from ..utils.bitset_utils import popcount
from .products import are_isomorphic

logger = logging.getLogger(__name__)

# (minimum value per parameter, parameter count)
_DOMAINS = {
    FamilyKind.PATH: ((1,), 1),
    FamilyKind.CYCLE: ((3,), 1),
    FamilyKind.COMPLETE: ((1,), 1),
    FamilyKind.STAR: ((1,), 1),
    FamilyKind.COMPLETE_BIPARTITE: ((1, 1), 2),
    FamilyKind.COMPLETE_BIPARTITE_MINUS_EDGE: ((2, 2), 2),
    FamilyKind.CUBE: ((), 0),
    FamilyKind.CUBE_MINUS_VERTEX: ((), 0),
    FamilyKind.PETERSEN: ((), 0),
    FamilyKind.COMPLETE_MINUS_MATCHING: ((1,), 1),
}


def validate_spec(spec: FamilySpec) -> None:
    """Raise ``FamilySpecError`` unless the parameters fit the family's domain."""
    if spec.kind == FamilyKind.COMPLEMENT:
        if spec.inner is None or spec.params:
            raise FamilySpecError(spec.to_text() if spec.inner else "complement", "complement needs one inner family")
        validate_spec(spec.inner)
        return
    minimums, count = _DOMAINS[spec.kind]
    if len(spec.params) != count:
        raise FamilySpecError(spec.to_text(), f"{spec.kind.value} takes {count} parameter(s)")
    for value, minimum in zip(spec.params, minimums):
        if value < minimum:
            raise FamilySpecError(spec.to_text(), f"parameter {value} below minimum {minimum}")
    if _vertex_count(spec) > MAX_VERTICES:
        raise SizeLimitError("vertex count", MAX_VERTICES, _vertex_count(spec))


def _vertex_count(spec: FamilySpec) -> int:
    kind, p = spec.kind, spec.params
    if kind in (FamilyKind.PATH, FamilyKind.CYCLE, FamilyKind.COMPLETE):
        return p[0]
    if kind == FamilyKind.STAR:
        return p[0] + 1
    if kind in (FamilyKind.COMPLETE_BIPARTITE, FamilyKind.COMPLETE_BIPARTITE_MINUS_EDGE):
        return p[0] + p[1]
    if kind == FamilyKind.COMPLETE_MINUS_MATCHING:
        return 2 * p[0]
    return {FamilyKind.CUBE: 8, FamilyKind.CUBE_MINUS_VERTEX: 7, FamilyKind.PETERSEN: 10}[kind]


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def _complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def _cube_edges() -> List[Tuple[int, int]]:
    return [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + j, 5 + (j + 2) % 5) for j in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec`` in its canonical labelling."""
    validate_spec(spec)
    kind, p = spec.kind, spec.params
    if kind == FamilyKind.COMPLEMENT:
        return generate(spec.inner).complement()
    if kind == FamilyKind.PATH:
        return _path(p[0])
    if kind == FamilyKind.CYCLE:
        return _cycle(p[0])
    if kind == FamilyKind.COMPLETE:
        return _complete(p[0])
    if kind == FamilyKind.STAR:
        return Graph.from_edges(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if kind == FamilyKind.COMPLETE_BIPARTITE:
        return _complete_bipartite(p[0], p[1])
    if kind == FamilyKind.COMPLETE_BIPARTITE_MINUS_EDGE:
        m, n = p
        edges = [(a, m + b) for a in range(m) for b in range(n) if (a, b) != (0, 0)]
        return Graph.from_edges(m + n, edges)
    if kind == FamilyKind.CUBE:
        return Graph.from_edges(8, _cube_edges())
    if kind == FamilyKind.CUBE_MINUS_VERTEX:
        return Graph.from_edges(7, [(u, v) for u, v in _cube_edges() if 7 not in (u, v)])
    if kind == FamilyKind.PETERSEN:
        return _petersen()
    if kind == FamilyKind.COMPLETE_MINUS_MATCHING:
        n = 2 * p[0]
        return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])
    raise FamilySpecError(spec.to_text(), f"unsupported family {kind}")


def petersen_vertex(label: str) -> int:
    """Map ``"x1".."x5"`` and ``"y1".."y5"`` to Petersen vertex indices."""
    if len(label) != 2 or label[0] not in "xy" or label[1] not in "12345":
        raise GraphUsageError(f"unknown Petersen label {label!r}")
    i = int(label[1])
    return i - 1 if label[0] == "x" else i + 4


def _pair_order(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs in graph6 order (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _graph_from_code(n: int, pairs: List[Tuple[int, int]], code: int) -> Graph:
    rows = [0] * n
    for bit, (i, j) in enumerate(pairs):
        if code >> bit & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def enumerate_all_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """Yield every labelled graph on ``n`` vertices in a fixed order.

    Graph number ``c`` has pair ``k`` (graph6 order) as an edge iff bit ``k``
    of ``c`` is set.
    """
    if n < 1:
        raise GraphUsageError(f"cannot enumerate graphs on {n} vertices")
    if n > MAX_ENUMERATION_VERTICES:
        raise SizeLimitError("enumeration vertex count", MAX_ENUMERATION_VERTICES, n)
    pairs = _pair_order(n)
    logger.debug(f"Enumerating {1 << len(pairs)} labelled graphs on {n} vertices")
    for code in range(1 << len(pairs)):
        graph = _graph_from_code(n, pairs, code)
        if connected and not graph.is_connected():
            continue
        yield graph


def _degree_key(graph: Graph) -> Tuple[int, ...]:
    return (graph.n, graph.edge_count) + tuple(sorted(popcount(row) for row in graph.adj))


def isomorphism_classes(graphs: Iterable[Graph]) -> List[Graph]:
    """First representative of every isomorphism class, in input order."""
    buckets: Dict[Tuple[int, ...], List[Graph]] = defaultdict(list)
    representatives = []
    for graph in graphs:
        bucket = buckets[_degree_key(graph)]
        if any(are_isomorphic(graph, seen) for seen in bucket):
            continue
        bucket.append(graph)
        representatives.append(graph)
    return representatives


def _extend(graph: Graph, neighbours: int) -> Graph:
    new = graph.n
    rows = [row | (1 << new if neighbours >> v & 1 else 0) for v, row in enumerate(graph.adj)]
    return Graph(new + 1, tuple(rows) + (neighbours,))


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    smaller = _classes(n - 1)
    return tuple(isomorphism_classes(
        _extend(base, neighbours) for base in smaller for neighbours in range(1 << (n - 1))
    ))


def enumerate_graph_classes(n: int, connected: bool = False) -> List[Graph]:
    """One graph per isomorphism class on ``n`` vertices.

    Every graph on ``n`` vertices is a graph on ``n - 1`` vertices plus one
    vertex, so extending each class below by every neighbourhood and
    deduplicating reaches all classes: 1044 of them at seven vertices against
    two million labelled graphs.
    """
    if n < 1:
        raise GraphUsageError(f"cannot enumerate graphs on {n} vertices")
    if n > MAX_ENUMERATION_VERTICES:
        raise SizeLimitError("enumeration vertex count", MAX_ENUMERATION_VERTICES, n)
    classes = _classes(n)
    logger.debug(f"{len(classes)} isomorphism classes on {n} vertices")
    return [graph for graph in classes if not connected or graph.is_connected()]


def random_graph(n: int, rng: random.Random, connected: bool = False) -> Graph:
    """Uniform labelled graph on ``n`` vertices; rejection-samples when ``connected``."""
    if n < 1:
        raise GraphUsageError(f"cannot sample graphs on {n} vertices")
    pairs = _pair_order(n)
    while True:
        code = rng.getrandbits(len(pairs)) if pairs else 0
        graph = _graph_from_code(n, pairs, code)
        if not connected or graph.is_connected():
            return graph
