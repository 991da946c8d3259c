"""
Interchange Formats
===================

graph6 (bit-exact), plain edge lists, DOT export and networkx interop.

graph6:
    N(n) followed by the upper triangle of the adjacency matrix, column by
    column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed 6 bits per byte,
    each byte offset by 63. N(n) is chr(63 + n) for n <= 62, otherwise
    '~' followed by 18 bits of n in three bytes.

Edge list:
    n m
    u v        (m lines, 0-based endpoints)

Usage:
    >>> from clawfree.formats import encode_graph6, decode_graph6
    >>> from clawfree.graph import empty, p9
    >>> encode_graph6(empty(1))
    '@'
    >>> decode_graph6(encode_graph6(p9())) == p9()
    True
"""

from __future__ import annotations

from typing import List, Tuple

import networkx as nx

from .graph import MAX_VERTICES, Graph, LabeledGraph, VertexPair, from_edges
from .stability import stable, beta

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """A graph6 string could not be parsed."""


class Graph6HeaderError(Graph6Error):
    """Empty input or malformed vertex-count header."""


class Graph6CharacterError(Graph6Error):
    """A byte outside the printable graph6 range 63..126."""


class Graph6LengthError(Graph6Error):
    """Body length disagrees with the vertex count."""


class Graph6PaddingError(Graph6Error):
    """Nonzero bits in the padding of the last byte."""


class EdgeListError(ValueError):
    """An edge-list document could not be parsed."""


# ── graph6 ───────────────────────────────────────────────────────────

def _check_graph6(s: str) -> None:
    """Validate a header-free graph6 string.

    networkx reports every defect as one NetworkXError; the checks here
    sort them into the typed errors above before the body is decoded.
    """
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"byte {ord(ch)} at position {pos} is outside 63..126")
    values = [ord(ch) - 63 for ch in s]

    if values[0] < 63:
        n, body = values[0], values[1:]
    else:
        if len(values) < 4 or values[1] == 63:
            # '~~' introduces the 36-bit form, far beyond the vertex cap
            raise Graph6HeaderError("malformed or unsupported long vertex-count header")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        if n <= 62:
            raise Graph6HeaderError(f"long header used for small n={n}")
        body = values[4:]
    if n > MAX_VERTICES:
        raise Graph6HeaderError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6LengthError(f"n={n} needs {expected} adjacency bytes, got {len(body)}")
    pad = expected * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")


@stable(since="0.1.0")
def encode_graph6(g: Graph) -> str:
    """graph6 text of g (no header, no newline)."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")


@stable(since="0.1.0")
def decode_graph6(text: str) -> Graph:
    """Parse one graph6 string. An optional ``>>graph6<<`` prefix is accepted.

    Raises:
        Graph6HeaderError, Graph6CharacterError, Graph6LengthError,
        Graph6PaddingError
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    _check_graph6(s)
    return from_networkx(nx.from_graph6_bytes(s.encode("ascii")))


graph6_encode = encode_graph6
graph6_decode = decode_graph6


# ── Edge list ────────────────────────────────────────────────────────

@stable(since="0.1.0")
def encode_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{x} {y}" for x, y in edges]
    return "\n".join(lines) + "\n"


@stable(since="0.1.0")
def decode_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m "u v" lines. Blank lines and #-comments are skipped.

    Raises:
        EdgeListError: malformed header, wrong edge count, bad endpoint,
            loop or repeated edge
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise EdgeListError("empty edge list")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise EdgeListError(f"header must be 'n m', got {lines[0]!r}") from None
    if not 0 <= n <= MAX_VERTICES or m < 0:
        raise EdgeListError(f"header out of range: n={n}, m={m}")
    if len(lines) - 1 != m:
        raise EdgeListError(f"header announces {m} edges, found {len(lines) - 1}")

    seen = set()
    edges: List[Tuple[int, int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        try:
            x, y = (int(tok) for tok in parts)
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}") from None
        if not (0 <= x < n and 0 <= y < n):
            raise EdgeListError(f"line {lineno}: endpoint outside 0..{n - 1}")
        if x == y:
            raise EdgeListError(f"line {lineno}: loop at {x}")
        key = (min(x, y), max(x, y))
        if key in seen:
            raise EdgeListError(f"line {lineno}: repeated edge {key}")
        seen.add(key)
        edges.append(key)
    return from_edges(n, edges)


def read_graph(text: str) -> Graph:
    """Auto-detect: a first line starting with a digit is an edge list, anything else graph6."""
    stripped = text.lstrip()
    if stripped[:1].isdigit():
        return decode_edge_list(text)
    first = stripped.splitlines()[0] if stripped else ""
    return decode_graph6(first)


# ── DOT & labels ─────────────────────────────────────────────────────

def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {x} -- {y};" for x, y in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


@beta(note="label line syntax may gain origin metadata")
def labeled_to_text(lg: LabeledGraph) -> str:
    """graph6 of the base graph, then one "i:(u,v)" line per vertex."""
    lines = [encode_graph6(lg.base)]
    lines += [f"{i}:{label}" for i, label in enumerate(lg.labels)]
    return "\n".join(lines) + "\n"


def labeled_from_text(text: str) -> LabeledGraph:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty labeled-graph text")
    base = decode_graph6(lines[0])
    labels = []
    for i, line in enumerate(lines[1:]):
        index, _, pair = line.partition(":")
        if int(index) != i or not (pair.startswith("(") and pair.endswith(")")):
            raise ValueError(f"malformed label line {line!r}")
        lo, hi = (int(tok) for tok in pair[1:-1].split(","))
        labels.append(VertexPair(lo, hi))
    return LabeledGraph(base, tuple(labels))


# ── networkx interop ─────────────────────────────────────────────────

def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_networkx(h: nx.Graph) -> Graph:
    """Nodes are relabeled 0..n-1 in sorted order."""
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return from_edges(len(nodes), [(index[a], index[b]) for a, b in h.edges() if a != b])
