"""Simple undirected graphs stored as dense adjacency matrices.

Vertices are always the integers ``0..n-1``. Besides the container this module
provides the edge-list and graph6 text formats, breadth-first distances and
exact walk counts ``A**l``.
"""

from collections import deque
from dataclasses import dataclass, field
import hashlib

import numpy as np

from ._intmath import checked_power
from .errors import DisconnectedGraphError, GraphFormatError


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    adjacency : array_like
        Symmetric 0/1 matrix with zero diagonal.
    """

    adjacency: np.ndarray
    neighbors: tuple = field(init=False, repr=False)

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.trace(a) != 0:
            raise ValueError("adjacency diagonal must be zero (no loops)")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        object.__setattr__(
            self, "neighbors", tuple(tuple(np.flatnonzero(row).tolist()) for row in a)
        )

    @classmethod
    def from_edges(cls, n, edges):
        a = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            a[u, v] = a[v, u] = 1
        return cls(a)

    @property
    def n(self):
        return self.adjacency.shape[0]

    @property
    def num_edges(self):
        return int(self.adjacency.sum()) // 2

    @property
    def degrees(self):
        return self.adjacency.sum(axis=1)

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        iu, iv = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(iu.tolist(), iv.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash(self.adjacency.tobytes())

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"

    def digest(self):
        """SHA-256 of the canonical edge-list text."""
        return hashlib.sha256(format_edge_list(self).encode()).hexdigest()


def parse_edge_list(text):
    """Parse the edge-list format.

    One edge ``u v`` per line. Lines starting with ``#`` and blank lines are
    ignored. An optional first line ``n <count>`` fixes the vertex count;
    otherwise it is one more than the largest id. Duplicate edges collapse.

    >>> parse_edge_list("0 1\\n1 2\\n2 0").n
    3
    """
    n = None
    edges = set()
    max_id = -1
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_content:
                raise GraphFormatError("header 'n <count>' must come first", lineno)
            if len(tokens) != 2:
                raise GraphFormatError("header must be 'n <count>'", lineno)
            n = _parse_int(tokens[1], lineno)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if n is not None and max(u, v) >= n:
            raise GraphFormatError(f"vertex {max(u, v)} out of range for n={n}", lineno)
        edges.add((min(u, v), max(u, v)))
        max_id = max(max_id, u, v)
    if n is None:
        if max_id < 0:
            raise GraphFormatError("no vertices: empty edge list without 'n' header")
        n = max_id + 1
    return Graph.from_edges(n, sorted(edges))


def _parse_int(token, lineno):
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise GraphFormatError(f"negative vertex id {value}", lineno)
    return value


def format_edge_list(g):
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text):
    """Decode one graph in graph6 format (optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= x < 64 for x in data):
        raise GraphFormatError("invalid graph6 characters")
    if data[0] < 63:
        n, data = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n, data = _bits_to_int(data[1:4]), data[4:]
    elif len(data) >= 8:
        n, data = _bits_to_int(data[2:8]), data[8:]
    else:
        raise GraphFormatError("truncated graph6 size field")
    need = n * (n - 1) // 2
    if len(data) != -(-need // 6):
        raise GraphFormatError(
            f"graph6 body has {len(data)} bytes, expected {-(-need // 6)} for n={n}"
        )
    bits = [(x >> (5 - k)) & 1 for x in data for k in range(6)]
    a = np.zeros((n, n), dtype=np.int64)
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                a[i, j] = a[j, i] = 1
            pos += 1
    return Graph(a)


def format_graph6(g):
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [int(g.adjacency[i, j]) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        sum(b << (5 - k) for k, b in enumerate(bits[p:p + 6]))
        for p in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + body)


def _bits_to_int(chunks):
    value = 0
    for c in chunks:
        value = (value << 6) | c
    return value


def distances_from(g, u, *, strict=True):
    """BFS distances from ``u``.

    With ``strict`` (the default) an unreachable vertex raises
    :class:`DisconnectedGraphError`; otherwise it is reported as ``-1``.
    """
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for n={g.n}")
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    if strict and -1 in dist:
        raise DisconnectedGraphError(u, dist.index(-1))
    return dist


def eccentricity(g, u):
    return max(distances_from(g, u))


def diameter(g):
    return max(eccentricity(g, u) for u in range(g.n))


def is_connected(g):
    if g.n == 0:
        return True
    return -1 not in distances_from(g, 0, strict=False)


def is_regular(g):
    """Common degree ``k`` if every vertex has degree ``k``, else ``None``."""
    deg = g.degrees
    if deg.size == 0 or (deg == deg[0]).all():
        return int(deg[0]) if deg.size else 0
    return None


def walk_counts(g, length):
    """Exact ``A**length`` as an int64 matrix: entry ``(u, v)`` counts walks.

    Raises :class:`~quospec.errors.WalkCountOverflowError` rather than wrapping.
    """
    return checked_power(g.adjacency, length)
