"""Standard graph fixtures and closed-form reference data.

Vertex numberings are fixed so that quotient matrices are reproducible:

* ``cycle(n)``, ``path(n)``: consecutive integers along the cycle/path.
* ``complete_bipartite(a, b)``: ``0..a-1`` on one side, ``a..a+b-1`` on the other.
* ``petersen()``: outer 5-cycle ``0..4``, inner pentagram ``5..9`` with
  ``5+i ~ 5+(i+2)%5``, spokes ``i ~ 5+i``.
* ``hypercube(d)``: bit strings as integers, adjacent when they differ in one bit.
* ``subdivided_complete(r)``: branch vertices ``0..r-1``, then one vertex per
  edge ``{i, j}`` (``i < j``) in lexicographic order.
* ``cone(g)``: the apex is vertex ``g.n``.
"""

from dataclasses import dataclass
from itertools import combinations
import math

import numpy as np

from .graph import Graph
from .partition import QuotientMatrix
from .spectra import Spectrum


def cycle(n):
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise ValueError(f"complete bipartite graph needs a, b >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def hypercube(d):
    if d < 1:
        raise ValueError(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)])


def cone(g):
    """Join a new apex vertex, numbered ``g.n``, to every vertex of ``g``."""
    a = np.zeros((g.n + 1, g.n + 1), dtype=np.int64)
    a[:g.n, :g.n] = g.adjacency
    a[g.n, :g.n] = a[:g.n, g.n] = 1
    return Graph(a)


def wheel(n):
    return cone(cycle(n))


def subdivided_complete(r):
    """``K_r`` with every edge replaced by a path of length two."""
    if r < 2:
        raise ValueError(f"subdivided complete graph needs r >= 2, got {r}")
    edges = []
    for k, (i, j) in enumerate(combinations(range(r), 2)):
        edges += [(i, r + k), (j, r + k)]
    return Graph.from_edges(r + r * (r - 1) // 2, edges)


@dataclass(frozen=True)
class ConeClosedForm:
    n: int
    k: int
    theta0: float
    theta1: float
    local0: float
    local1: float


def cone_closed_form(n, k):
    """Apex eigenvalues and local multiplicities for the cone over a ``k``-regular graph on ``n`` vertices."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"need n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    root = math.sqrt(k * k + 4 * n)
    return ConeClosedForm(
        n, k, (k + root) / 2, (k - root) / 2, (1 - k / root) / 2, (1 + k / root) / 2
    )


def hadamard_b1(n):
    return [
        [0, 2 * n, 0, 0, 0],
        [1, 0, 4 * n - 2, 0, 0],
        [0, n, 0, n, 0],
        [0, 0, 4 * n - 2, 0, 1],
        [0, 0, 0, 2 * n, 0],
    ]


def hadamard_b2(n):
    return [
        [0, 4 * n - 1, 0, 0],
        [1, 0, 2 * n - 1, 0],
        [0, 2 * n - 1, 0, 2 * n],
        [0, 0, 2 * n, 0],
    ]


def hadamard_eigenvalues(n):
    big, small = math.sqrt(8 * n * n - 2 * n), math.sqrt(2 * n)
    return (big, small, 0.0, -small, -big)


def hadamard_crossed1(n):
    """Crossed multiplicities from a degree-``2n`` vertex, columns by distance 0..4."""
    a = 1 / (16 * n - 4)
    b = math.sqrt(2) / (8 * math.sqrt(4 * n * n - n))
    c = math.sqrt(2) / (8 * math.sqrt(n))
    e = (2 * n - 1) / (4 * n - 1)
    f = 1 / (8 * n - 2)
    return np.array([
        [a, b, a, b, a],
        [1 / 4, c, 0, -c, -1 / 4],
        [e, 0, -f, 0, e],
        [1 / 4, -c, 0, c, -1 / 4],
        [a, -b, a, -b, a],
    ])


def hadamard_crossed2(n):
    """Crossed multiplicities from a degree-``(4n-1)`` vertex, columns by distance 0..3."""
    b = math.sqrt(2) / (8 * math.sqrt(4 * n * n - n))
    c = math.sqrt(2) / (8 * math.sqrt(n))
    p = 1 / (8 * n)
    q = (4 * n - 1) / (8 * n)
    return np.array([
        [p, b, p, b],
        [q, c, -p, -c],
        [0, 0, 0, 0],
        [q, -c, -p, c],
        [p, -b, p, -b],
    ])


@dataclass(frozen=True, eq=False)
class HadamardQuotients:
    """Quotients and closed forms for the Hadamard distance-biregular graph ``Hb(n)``.

    ``Hb(n)`` is bipartite on ``12n - 2`` vertices with sides of ``8n - 2``
    vertices of degree ``2n`` and ``4n`` vertices of degree ``4n - 1``.
    ``b1`` is the distance quotient hung from a vertex on the larger side and
    ``b2`` from a vertex on the smaller side. For ``n = 1`` (subdivided
    ``K_4``) these are the subdivision and the branch vertices.
    """

    n: int
    b1: QuotientMatrix
    b2: QuotientMatrix
    spectrum: Spectrum
    crossed1: np.ndarray
    crossed2: np.ndarray

    @property
    def order(self):
        return 12 * self.n - 2

    @property
    def side_sizes(self):
        """``(larger side, smaller side)``: ``(8n - 2, 4n)``."""
        return 8 * self.n - 2, 4 * self.n


def hadamard_quotients(n):
    if n < 1:
        raise ValueError(f"Hadamard parameter must be >= 1, got {n}")
    mults = (1, 4 * n - 1, 4 * n - 2, 4 * n - 1, 1)
    return HadamardQuotients(
        n,
        QuotientMatrix.from_matrix(hadamard_b1(n)),
        QuotientMatrix.from_matrix(hadamard_b2(n)),
        Spectrum(hadamard_eigenvalues(n), mults),
        hadamard_crossed1(n),
        hadamard_crossed2(n),
    )


def petersen_intersection_matrix():
    return [[0, 3, 0], [1, 0, 2], [0, 1, 2]]


FIXTURES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
    "hypercube": (hypercube, 1),
    "wheel": (wheel, 1),
    "subdivided-complete": (subdivided_complete, 1),
    "hb1": (lambda: subdivided_complete(4), 0),
}


def fixture(spec):
    """Build a fixture from ``name`` or ``name:arg[,arg]``, e.g. ``"cycle:5"``."""
    name, _, args = spec.partition(":")
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    build, arity = FIXTURES[name]
    values = [int(a) for a in args.split(",")] if args else []
    if len(values) != arity:
        raise ValueError(f"fixture {name!r} takes {arity} integer argument(s)")
    return build(*values)
