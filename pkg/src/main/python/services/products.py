"""Graph products and product-level adjacency.

Product vertex ``(g, h)`` has flat index ``g * n_h + h``. Rows are built
block by block from the factor rows, so a product row costs ``O(n_g)``
big-integer operations.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from ..config.search_config import MAX_ISOMORPHISM_VERTICES, MAX_PRODUCT_VERTICES
from ..interfaces.errors import GraphUsageError, SizeLimitError, VerificationError
from ..models.domain_models import EdgeKind, ProductVertex
from ..models.graph import Graph
from ..utils.bitset_utils import popcount, tensor_mask

logger = logging.getLogger(__name__)


def check_product_size(G: Graph, H: Graph) -> None:
    if G.n * H.n > MAX_PRODUCT_VERTICES:
        raise SizeLimitError("product vertex count", MAX_PRODUCT_VERTICES, G.n * H.n)


def check_product_vertex(G: Graph, H: Graph, v: ProductVertex) -> None:
    if not (v.g < G.n and v.h < H.n):
        raise GraphUsageError(f"product vertex {v.to_list()} out of range for {G.n}x{H.n}")


def _non_neighbors(graph: Graph, v: int) -> int:
    """Vertices other than ``v`` that are not adjacent to ``v``."""
    return graph.full & ~graph.closed_rows[v]


def cartesian_rows(G: Graph, H: Graph) -> List[int]:
    rows = []
    for g in range(G.n):
        for h in range(H.n):
            rows.append(tensor_mask(1 << g, H.adj[h], H.n) | tensor_mask(G.adj[g], 1 << h, H.n))
    return rows


def direct_rows(G: Graph, H: Graph) -> List[int]:
    return [tensor_mask(G.adj[g], H.adj[h], H.n) for g in range(G.n) for h in range(H.n)]


def codirect_rows(G: Graph, H: Graph) -> List[int]:
    return [
        tensor_mask(_non_neighbors(G, g), _non_neighbors(H, h), H.n)
        for g in range(G.n)
        for h in range(H.n)
    ]


def _from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def cartesian_product(G: Graph, H: Graph) -> Graph:
    check_product_size(G, H)
    return _from_rows(cartesian_rows(G, H))


def direct_product(G: Graph, H: Graph) -> Graph:
    check_product_size(G, H)
    return _from_rows(direct_rows(G, H))


def strong_product(G: Graph, H: Graph) -> Graph:
    check_product_size(G, H)
    rows = []
    for g in range(G.n):
        for h in range(H.n):
            flat = g * H.n + h
            rows.append(tensor_mask(G.closed_rows[g], H.closed_rows[h], H.n) & ~(1 << flat))
    return _from_rows(rows)


def lexicographic_product(G: Graph, H: Graph) -> Graph:
    check_product_size(G, H)
    rows = []
    for g in range(G.n):
        for h in range(H.n):
            rows.append(tensor_mask(G.adj[g], H.full, H.n) | tensor_mask(1 << g, H.adj[h], H.n))
    return _from_rows(rows)


def modular_product(G: Graph, H: Graph) -> Graph:
    """Union of the Cartesian, direct and co-direct edge sets.

    The three edge sets are checked pairwise disjoint while the rows are
    assembled.
    """
    check_product_size(G, H)
    rows = []
    for flat, (c, d, e) in enumerate(zip(cartesian_rows(G, H), direct_rows(G, H), codirect_rows(G, H))):
        if c & d or c & e or d & e:
            raise VerificationError("modular_product", f"edge sets overlap at flat vertex {flat}")
        rows.append(c | d | e)
    return _from_rows(rows)


def closed_product_row(G: Graph, H: Graph, g: int, h: int) -> int:
    """Closed neighbourhood of ``(g, h)`` in ``G⋄H`` as a flat mask.

    A vertex ``(g', h')`` is in it iff ``g' in N[g]`` and ``h' in N[h]``
    agree, which gives one H-block per ``g'``.
    """
    inside = H.closed_rows[h]
    outside = H.full & ~inside
    row = 0
    closed_g = G.closed_rows[g]
    for g2 in range(G.n):
        block = inside if closed_g >> g2 & 1 else outside
        row |= block << (g2 * H.n)
    return row


def closed_product_rows(G: Graph, H: Graph) -> List[int]:
    check_product_size(G, H)
    return [closed_product_row(G, H, g, h) for g in range(G.n) for h in range(H.n)]


def classify_edge(G: Graph, H: Graph, a: ProductVertex, b: ProductVertex) -> EdgeKind:
    """Which of the three modular product edge sets contains ``ab``."""
    check_product_vertex(G, H, a)
    check_product_vertex(G, H, b)
    if a == b:
        raise GraphUsageError(f"classify_edge needs two distinct vertices, got {a.to_list()} twice")
    g_edge = G.has_edge(a.g, b.g)
    h_edge = H.has_edge(a.h, b.h)
    if (a.g == b.g and h_edge) or (a.h == b.h and g_edge):
        return EdgeKind.CARTESIAN
    if g_edge and h_edge:
        return EdgeKind.DIRECT
    if a.g != b.g and a.h != b.h and not g_edge and not h_edge:
        return EdgeKind.CODIRECT
    return EdgeKind.NONE


def dominates(G: Graph, H: Graph, dominator: ProductVertex, target: ProductVertex) -> bool:
    """``target`` lies in the closed neighbourhood of ``dominator`` in ``G⋄H``."""
    check_product_vertex(G, H, dominator)
    check_product_vertex(G, H, target)
    in_g = bool(G.closed_rows[dominator.g] >> target.g & 1)
    in_h = bool(H.closed_rows[dominator.h] >> target.h & 1)
    return in_g == in_h


def _degree_signature(graph: Graph) -> List[int]:
    return sorted(popcount(row) for row in graph.adj)


def find_isomorphism(G1: Graph, G2: Graph) -> Optional[Tuple[int, ...]]:
    """Return a bijection ``phi`` with ``uv in E(G1) <=> phi(u)phi(v) in E(G2)``."""
    n = G1.n
    if max(n, G2.n) > MAX_ISOMORPHISM_VERTICES:
        raise SizeLimitError("isomorphism vertex count", MAX_ISOMORPHISM_VERTICES, max(n, G2.n))
    if n != G2.n or G1.edge_count != G2.edge_count:
        return None
    if _degree_signature(G1) != _degree_signature(G2):
        return None

    degrees1 = [popcount(row) for row in G1.adj]
    degrees2 = [popcount(row) for row in G2.adj]
    # most constrained vertices first, then BFS-ish by adjacency to placed ones
    order: List[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda u: (popcount(G1.adj[u] & placed), degrees1[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)

    mapping = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        u = order[depth]
        for w in range(n):
            if used >> w & 1 or degrees2[w] != degrees1[u]:
                continue
            consistent = True
            for prior in order[:depth]:
                if (G1.adj[u] >> prior & 1) != (G2.adj[w] >> mapping[prior] & 1):
                    consistent = False
                    break
            if not consistent:
                continue
            mapping[u] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            mapping[u] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


def are_isomorphic(G1: Graph, G2: Graph) -> bool:
    return find_isomorphism(G1, G2) is not None

