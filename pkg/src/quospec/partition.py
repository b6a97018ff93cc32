"""Vertex partitions, equitability and quotient matrices.

A partition ``pi = (V_0, ..., V_{m-1})`` is equitable when every vertex of
``V_i`` has the same number ``b_ij`` of neighbours in ``V_j``. The matrix
``B = (b_ij)`` is the quotient matrix and satisfies ``A S = S B`` for the
characteristic matrix ``S``.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._intmath import checked_power
from .errors import GraphFormatError, NotEquitableError
from .graph import distances_from


@dataclass(frozen=True, eq=False)
class Partition:
    """Ordered list of disjoint, nonempty cells covering ``0..n-1``."""

    cells: tuple
    cell_of: tuple = field(init=False, repr=False)

    def __post_init__(self):
        cells = tuple(tuple(sorted(int(v) for v in c)) for c in self.cells)
        if any(not c for c in cells):
            raise ValueError("partition cells must be nonempty")
        n = sum(len(c) for c in cells)
        cell_of = [-1] * n
        for i, c in enumerate(cells):
            for v in c:
                if not 0 <= v < n or cell_of[v] != -1:
                    raise ValueError(f"cells do not partition 0..{n - 1} (vertex {v})")
                cell_of[v] = i
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "cell_of", tuple(cell_of))

    @property
    def n(self):
        return len(self.cell_of)

    @property
    def m(self):
        return len(self.cells)

    @property
    def sizes(self):
        return tuple(len(c) for c in self.cells)

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def refines(self, other):
        """True if every cell of ``self`` lies inside a cell of ``other``."""
        if self.n != other.n:
            return False
        return all(len({other.cell_of[v] for v in c}) == 1 for c in self.cells)


class Witness(NamedTuple):
    """Two vertices of cell ``i`` with different neighbour counts into cell ``j``."""

    i: int
    j: int
    u: int
    u_other: int
    count_u: int
    count_other: int


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    """Quotient matrix ``B`` with the sizes of the cells it was taken over.

    ``partition`` is ``None`` for quotients given directly as matrices (see
    :meth:`from_matrix`).
    """

    matrix: np.ndarray
    cell_sizes: tuple
    partition: Partition | None = None

    def __post_init__(self):
        b = np.array(self.matrix, dtype=np.int64)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValueError(f"quotient must be square, got shape {b.shape}")
        if len(self.cell_sizes) != b.shape[0]:
            raise ValueError("need one cell size per row of the quotient")
        b.setflags(write=False)
        object.__setattr__(self, "matrix", b)
        object.__setattr__(self, "cell_sizes", tuple(int(s) for s in self.cell_sizes))

    @classmethod
    def from_matrix(cls, matrix):
        """Quotient hung from a single vertex, with cell sizes recovered from ``B``.

        Cell 0 has size 1; the rest follow from ``|V_i| b_ij = |V_j| b_ji``
        propagated along nonzero entries. Raises :class:`NotEquitableError` if
        sizes are inconsistent or not positive integers.
        """
        b = np.asarray(matrix, dtype=np.int64)
        m = b.shape[0]
        sizes = [None] * m
        sizes[0] = 1.0
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(m):
                if b[i, j] and sizes[j] is None:
                    if not b[j, i]:
                        raise NotEquitableError(f"b[{i},{j}] > 0 but b[{j},{i}] = 0")
                    sizes[j] = sizes[i] * b[i, j] / b[j, i]
                    stack.append(j)
        if any(s is None for s in sizes):
            raise NotEquitableError("quotient graph is not connected from cell 0")
        rounded = [round(s) for s in sizes]
        if any(abs(s - r) > 1e-9 or r < 1 for s, r in zip(sizes, rounded)):
            raise NotEquitableError(f"cell sizes {sizes} are not positive integers")
        q = cls(b, rounded)
        if not _is_balanced(q):
            raise NotEquitableError("|V_i| b_ij != |V_j| b_ji for recovered sizes")
        return q

    @property
    def m(self):
        return self.matrix.shape[0]

    @property
    def n(self):
        return sum(self.cell_sizes)

    def key(self):
        """Hashable identity used to share work between vertices."""
        return (self.matrix.tobytes(), self.matrix.shape, self.cell_sizes)

    def __eq__(self, other):
        if not isinstance(other, QuotientMatrix):
            return NotImplemented
        return self.cell_sizes == other.cell_sizes and np.array_equal(
            self.matrix, other.matrix
        )

    def __hash__(self):
        return hash(self.key())


def _is_balanced(q):
    weighted = np.asarray(q.cell_sizes)[:, None] * q.matrix
    return np.array_equal(weighted, weighted.T)


def characteristic_matrix(pi):
    """The ``n x m`` 0/1 matrix whose column ``i`` indicates cell ``i``."""
    s = np.zeros((pi.n, pi.m), dtype=np.int64)
    s[np.arange(pi.n), pi.cell_of] = 1
    return s


def _counts(g, pi):
    return g.adjacency @ characteristic_matrix(pi)


def find_witness(g, pi):
    """First violation of equitability, or ``None`` if ``pi`` is equitable."""
    _check_sizes(g, pi)
    counts = _counts(g, pi)
    for i, cell in enumerate(pi.cells):
        first = cell[0]
        for v in cell[1:]:
            diff = np.flatnonzero(counts[v] != counts[first])
            if diff.size:
                j = int(diff[0])
                return Witness(i, j, first, v, int(counts[first, j]), int(counts[v, j]))
    return None


def is_equitable(g, pi):
    return find_witness(g, pi) is None


def quotient_matrix(g, pi):
    """Quotient matrix of ``g`` over the equitable partition ``pi``.

    Raises
    ------
    NotEquitableError
        With the offending :class:`Witness` attached.
    """
    witness = find_witness(g, pi)
    if witness is not None:
        raise NotEquitableError(
            f"partition is not equitable: vertices {witness.u} and {witness.u_other} "
            f"of cell {witness.i} have {witness.count_u} and {witness.count_other} "
            f"neighbours in cell {witness.j}",
            witness,
        )
    counts = _counts(g, pi)
    reps = [c[0] for c in pi.cells]
    return QuotientMatrix(counts[reps], pi.sizes, pi)


def verify_commutation(g, pi, b):
    """Exact test of ``A S == S B``."""
    _check_sizes(g, pi)
    b = np.asarray(b.matrix if isinstance(b, QuotientMatrix) else b)
    if b.shape != (pi.m, pi.m):
        raise ValueError(f"B has shape {b.shape}, expected ({pi.m}, {pi.m})")
    s = characteristic_matrix(pi)
    return bool(np.array_equal(g.adjacency @ s, s @ b))


def distance_partition(g, u):
    """Cells ``{v : dist(u, v) = i}`` for ``i = 0..ecc(u)``; not necessarily equitable."""
    dist = distances_from(g, u)
    cells = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        cells[d].append(v)
    return Partition(cells)


def coarsest_equitable_refinement(g, seed):
    """Colour refinement of ``seed`` until every cell is equitable.

    Each round splits every cell by the vector of neighbour counts into all
    current cells. Split pieces stay in the position of their parent and are
    ordered by that count vector, so cells end up ordered by seed cell first
    and signature second. Because the order never depends on vertex labels,
    isomorphic rooted graphs receive identical quotient matrices.
    """
    _check_sizes(g, seed)
    cells = [list(c) for c in seed.cells]
    while True:
        counts = _counts(g, Partition(cells))
        refined = []
        for cell in cells:
            groups = defaultdict(list)
            for v in cell:
                groups[tuple(counts[v].tolist())].append(v)
            refined.extend(groups[key] for key in sorted(groups, reverse=True))
        if len(refined) == len(cells):
            return Partition(refined)
        cells = refined


def vertex_partition(g, u):
    """Coarsest equitable partition with ``{u}`` as its first cell.

    It refines the distance partition from ``u``. Cells are listed by distance
    from ``u``, ties kept in refinement order, so the result equals
    :func:`distance_partition` whenever that one is equitable.
    """
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for n={g.n}")
    dist = distances_from(g, u)
    rest = [v for v in range(g.n) if v != u]
    seed = Partition([[u], rest] if rest else [[u]])
    refined = coarsest_equitable_refinement(g, seed)
    return Partition(sorted(refined.cells, key=lambda c: dist[c[0]]))


def quotient_walk_counts(b, length):
    """Exact ``B**length``; entry ``(i, j)`` counts walks from one vertex of cell i into cell j."""
    matrix = b.matrix if isinstance(b, QuotientMatrix) else b
    return checked_power(matrix, length)


def parse_partition(text, n=None):
    """One cell per line, comma-separated vertex ids; ``#`` lines are comments."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            cells.append([int(tok) for tok in line.split(",") if tok.strip()])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line!r}", lineno) from None
    try:
        pi = Partition(cells)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    if n is not None and pi.n != n:
        raise GraphFormatError(f"partition covers {pi.n} vertices, graph has {n}")
    return pi


def format_partition(pi):
    return "".join(",".join(map(str, c)) + "\n" for c in pi.cells)


def _check_sizes(g, pi):
    if pi.n != g.n:
        raise ValueError(f"partition covers {pi.n} vertices, graph has {g.n}")
