import hashlib
import logging

import networkx as nx

from .graph_utils import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def _order_from_header(text: str):
    """
    Decode the N(n) prefix.

    Returns:
        (n, number of header characters)
    """
    first = ord(text[0]) - 63
    if first < 63:
        return first, 1
    if len(text) >= 2 and text[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    digits = text[start:start + width]
    if len(digits) < width:
        raise Graph6Error("graph6 header truncated")
    n = 0
    for ch in digits:
        n = (n << 6) | (ord(ch) - 63)
    return n, start + width


def graph6_read(text) -> Graph:
    """
    Parse one graph6 string into a Graph.

    Args:
        text: str or bytes, optionally prefixed by >>graph6<< and surrounded by whitespace.

    Returns:
        Graph with vertices 0..n-1 in graph6 order.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise Graph6Error("graph6 input is not ASCII") from e
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} outside the graph6 range 63..126")

    n, header_len = _order_from_header(s)
    if header_len > 1 and n <= 62:
        raise Graph6Error(f"graph6 header uses the long form for n={n}")
    want = header_len + (n * (n - 1) // 2 + 5) // 6
    if len(s) < want:
        raise Graph6Error(f"truncated graph6 bit stream: expected {want} characters for n={n}, got {len(s)}")
    if len(s) > want:
        raise Graph6Error(f"trailing garbage after graph6 string: {len(s) - want} extra characters")
    pad = -(n * (n - 1) // 2) % 6
    if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits at the end of the graph6 bit stream")

    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6Error(f"graph6 decode failed: {e}") from e
    return Graph.from_networkx(G)


def graph6_write(g: Graph) -> str:
    """Encode g as a graph6 string, no header and no trailing newline."""
    data = nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.order)), header=False)
    return data.decode("ascii").strip()


def host_id(g: Graph) -> str:
    return hashlib.sha1(graph6_write(g).encode("ascii")).hexdigest()
