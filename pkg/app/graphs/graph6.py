"""
graph6 Encoding

Printable single-line graph encoding: a size header followed by the upper
triangle of the adjacency matrix in column-major order, six bits per
character offset by 63.
"""
import logging
from pathlib import Path
from typing import List, Union

from .types import Graph, Graph6Error

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MAX_ORDER = 258047
_SHORT_LIMIT = 62


def _encode_order(n: int) -> str:
    if n <= _SHORT_LIMIT:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0))


def serialize_graph6(G: Graph) -> str:
    """
    Encode G as graph6 text (no header, no newline)

    Raises:
        Graph6Error: Order beyond the 4-byte header range
    """
    n = G.n
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 supports at most {MAX_ORDER} vertices, got {n}")

    bits: List[int] = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(63 + value))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """
    Decode one graph6 line

    An optional ">>graph6<<" header and a trailing line break are accepted.

    Raises:
        Graph6Error: Bad characters, malformed header, wrong length or
            non-zero padding
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise Graph6Error("graph6 text must be ASCII") from e
    line = text.rstrip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 text")
    bad = sorted({c for c in line if not 63 <= ord(c) <= 126})
    if bad:
        raise Graph6Error(f"characters outside graph6 range: {bad!r}")

    values = [ord(c) - 63 for c in line]
    if values[0] < 63:
        n, body = values[0], values[1:]
    elif len(values) >= 2 and values[1] == 63:
        raise Graph6Error("8-byte graph6 header is not supported")
    elif len(values) >= 4:
        n = values[1] << 12 | values[2] << 6 | values[3]
        if n <= _SHORT_LIMIT:
            raise Graph6Error(f"non-minimal header for n={n}")
        body = values[4:]
    else:
        raise Graph6Error("truncated graph6 header")

    total = n * (n - 1) // 2
    expected = (total + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {expected} for n={n}")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    padding = len(body) * 6 - total
    if padding and body[-1] & ((1 << padding) - 1):
        raise Graph6Error("non-zero padding bits")
    return Graph.from_edges(n, edges)


def read_graph6_file(path: Union[str, Path]) -> Graph:
    """Parse the first non-empty line of a graph6 file"""
    with open(path, "r", encoding="ascii") as f:
        for line in f:
            if line.strip():
                logger.debug("Read graph6 from %s", path)
                return parse_graph6(line.strip())
    raise Graph6Error(f"no graph in {path}")


def write_graph6_file(path: Union[str, Path], G: Graph, header: bool = False) -> None:
    """Write G as one graph6 line"""
    with open(path, "w", encoding="ascii") as f:
        f.write((HEADER if header else "") + serialize_graph6(G) + "\n")
    logger.debug("Wrote graph6 (n=%d) to %s", G.n, path)
