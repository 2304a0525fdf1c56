"""graph6 reader and writer."""
import logging
import os
from typing import List

from ..config.search_config import MAX_VERTICES
from ..interfaces.errors import Graph6ParseError
from ..interfaces.harness_interfaces import GraphSourceInterface
from ..models.domain_models import NamedGraph
from ..models.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_BIAS = 63
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047
# code of the '~' escape before biasing
_ESCAPE = 63


def _size_prefix(n: int) -> List[int]:
    if n <= _SHORT_LIMIT:
        return [n]
    if n <= _MEDIUM_LIMIT:
        return [_ESCAPE, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [_ESCAPE, _ESCAPE] + [(n >> shift) & 63 for shift in (30, 24, 18, 12, 6, 0)]


def emit_graph6(graph: Graph) -> str:
    """Encode a graph; pairs are listed column by column, (0,1),(0,2),(1,2),..."""
    chunks = _size_prefix(graph.n)
    value = 0
    width = 0
    for j in range(1, graph.n):
        row = graph.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            width += 1
            if width == 6:
                chunks.append(value)
                value = 0
                width = 0
    if width:
        chunks.append(value << (6 - width))
    return "".join(chr(c + _BIAS) for c in chunks)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string; a leading header and trailing whitespace are ignored."""
    original = text
    text = text.rstrip("\r\n\t ")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    if len(text) <= base:
        raise Graph6ParseError(original, base, "empty input")

    codes = []
    for offset in range(base, len(text)):
        code = ord(text[offset]) - _BIAS
        if not 0 <= code <= 63:
            raise Graph6ParseError(original, offset, f"byte {text[offset]!r} outside the graph6 alphabet")
        codes.append(code)

    if codes[0] != _ESCAPE:
        n, pos = codes[0], 1
    elif len(codes) >= 2 and codes[1] == _ESCAPE:
        if len(codes) < 8:
            raise Graph6ParseError(original, base + len(codes), "truncated size field")
        n = 0
        for code in codes[2:8]:
            n = (n << 6) | code
        pos = 8
    else:
        if len(codes) < 4:
            raise Graph6ParseError(original, base + len(codes), "truncated size field")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        pos = 4

    if n > MAX_VERTICES:
        raise Graph6ParseError(original, base, f"vertex count {n} exceeds {MAX_VERTICES}")
    if n == 0:
        raise Graph6ParseError(original, base, "graph has no vertices")

    pairs = n * (n - 1) // 2
    needed = (pairs + 5) // 6
    payload = codes[pos:]
    if len(payload) < needed:
        raise Graph6ParseError(original, base + len(codes), f"expected {needed} payload bytes, found {len(payload)}")
    if len(payload) > needed:
        raise Graph6ParseError(original, base + pos + needed, "trailing bytes after payload")

    rows = [0] * n
    bit_index = 0
    for j in range(1, n):
        for i in range(j):
            code = payload[bit_index // 6]
            if code >> (5 - bit_index % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(rows))


class Graph6FileSource(GraphSourceInterface):
    """Reads graph6 files, one graph per non-empty line."""

    def __init__(self):
        """Initialize the graph6 file source."""
        self.logger = logging.getLogger(__name__)

    def supports(self, token: str) -> bool:
        return os.path.isfile(token)

    def load(self, token: str) -> List[NamedGraph]:
        self.logger.info(f"Reading graph6 file: {token}")
        graphs = []
        with open(token, "r", encoding="ascii", errors="replace") as handle:
            for line_number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line or line == GRAPH6_HEADER:
                    continue
                try:
                    graph = parse_graph6(line)
                except Graph6ParseError as e:
                    raise Graph6ParseError(e.text, e.offset, f"{token} line {line_number}: {e.message}") from e
                graphs.append(NamedGraph(f"{os.path.basename(token)}:{line_number}", graph))
        self.logger.debug(f"Loaded {len(graphs)} graphs from {token}")
        return graphs
