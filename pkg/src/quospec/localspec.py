"""Local and crossed multiplicities computed from quotient matrices.

For an equitable partition whose first cell is the single vertex ``u``, with
quotient matrix ``B``, the crossed multiplicity of an eigenvalue ``theta_i``
of the graph between ``u`` and any ``v`` in cell ``j`` is

    m_uv(theta_i) = L_i(B)[0, j] / |V_j|

where ``L_i`` is the Lagrange polynomial over all distinct eigenvalues of the
graph. Equivalently it is ``Ebar[0, j] / |V_j|`` for the idempotent ``Ebar``
of ``B`` belonging to ``theta_i``, and zero when ``theta_i`` is not an
eigenvalue of ``B``. The diagonal values ``m_u(theta_i) = m_uu(theta_i)`` are
the local multiplicities. In angle terms, ``m_u(theta_i) = cos^2 beta_ui``
where ``beta_ui`` is the angle between ``e_u`` and its projection onto the
eigenspace.

Summing local multiplicities over all vertices recovers the ordinary
multiplicities, so the whole spectrum follows from one quotient per class of
vertices without diagonalising the adjacency matrix.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._intmath import checked_matmul
from .errors import NotEquitableError, NumericalError
from .graph import is_regular
from .partition import (
    QuotientMatrix,
    distance_partition,
    quotient_matrix,
    vertex_partition,
)
from .spectra import (
    DEFAULT_TOL,
    Spectrum,
    dedup_eigenvalues,
    idempotents_from_eigen,
    lagrange_idempotent,
    oracle_eigen,
    quotient_eigen,
    symmetric_eigen,
)

# Quotient and full-graph eigenvalues carry different rounding noise.
MATCH_ATOL = 1e-7
ROUNDING_RESIDUAL = 1e-6


@dataclass(frozen=True, eq=False)
class CrossedMultiplicityTable:
    """Rows are graph eigenvalues, columns are cells; entry ``(i, j)`` is ``m_uv(theta_i)`` for ``v`` in cell ``j``."""

    vertex: int | None
    cell_sizes: tuple
    eigenvalues: tuple
    table: np.ndarray

    @property
    def local_multiplicities(self):
        return self.table[:, 0]

    @property
    def column_sums(self):
        return self.table.sum(axis=0)


@dataclass(frozen=True, eq=False)
class LocalSpectrum:
    """Eigenvalues with nonzero ``u``-local multiplicity, decreasing."""

    vertex: int | None
    values: tuple
    multiplicities: tuple
    quotient: QuotientMatrix | None = None

    def __iter__(self):
        return iter(zip(self.values, self.multiplicities))

    def __len__(self):
        return len(self.values)


def _thetas(ev_gamma):
    values = ev_gamma.values if isinstance(ev_gamma, Spectrum) else ev_gamma
    thetas = [float(x) for x in values]
    if any(a <= b for a, b in zip(thetas, thetas[1:])):
        raise ValueError("graph eigenvalues must be distinct and decreasing")
    return thetas


def _as_quotient(b):
    return b if isinstance(b, QuotientMatrix) else QuotientMatrix.from_matrix(b)


def _require_hung(b):
    if b.cell_sizes[0] != 1:
        raise ValueError(f"first cell must be a single vertex, has size {b.cell_sizes[0]}")


def _match(qe, thetas, atol):
    """Index into ``thetas`` for each distinct eigenvalue of the quotient."""
    matches = []
    for tau in qe.spectrum.values:
        gaps = [abs(tau - t) for t in thetas]
        k = int(np.argmin(gaps))
        if gaps[k] > atol:
            raise NotEquitableError(
                f"quotient eigenvalue {tau!r} is not among the graph eigenvalues "
                "(wrong eigenvalue list or non-equitable quotient)"
            )
        if k in matches:
            raise NumericalError(f"two quotient eigenvalues match {thetas[k]!r}")
        matches.append(k)
    return matches


def _vertex_of(b):
    return b.partition.cells[0][0] if b.partition is not None else None


def crossed_via_lagrange(b, ev_gamma, *, atol=MATCH_ATOL):
    """Crossed multiplicity table from Lagrange polynomials of the graph evaluated at ``B``.

    Parameters
    ----------
    b : QuotientMatrix or array_like
        Quotient of an equitable partition whose first cell is ``{u}``.
    ev_gamma : Spectrum or sequence of float
        All distinct eigenvalues of the graph, decreasing.
    """
    b = _as_quotient(b)
    _require_hung(b)
    thetas = _thetas(ev_gamma)
    _match(quotient_eigen(b), thetas, atol)
    sizes = np.asarray(b.cell_sizes, dtype=float)
    rows = [lagrange_idempotent(b.matrix, thetas, i)[0] / sizes for i in range(len(thetas))]
    return CrossedMultiplicityTable(_vertex_of(b), b.cell_sizes, tuple(thetas), np.array(rows))


def crossed_via_quotient_idempotents(b, ev_gamma, *, atol=MATCH_ATOL):
    """Crossed multiplicity table from the idempotents of ``B``; rows for ``theta`` outside ``ev B`` are zero."""
    b = _as_quotient(b)
    _require_hung(b)
    thetas = _thetas(ev_gamma)
    qe = quotient_eigen(b)
    sizes = np.asarray(b.cell_sizes, dtype=float)
    table = np.zeros((len(thetas), b.m))
    for k, i in enumerate(_match(qe, thetas, atol)):
        table[i] = qe.idempotents[k][0] / sizes
    return CrossedMultiplicityTable(_vertex_of(b), b.cell_sizes, tuple(thetas), table)


def oracle_spectrum(g, tol=DEFAULT_TOL):
    """Spectrum of the adjacency matrix from LAPACK, for cross-checking."""
    return dedup_eigenvalues(oracle_eigen(g.adjacency).eigenvalues, tol)


def oracle_idempotents(g, tol=DEFAULT_TOL):
    dec = oracle_eigen(g.adjacency)
    return idempotents_from_eigen(dec, dedup_eigenvalues(dec.eigenvalues, tol))


def crossed_direct_oracle(g, u, v, tol=DEFAULT_TOL):
    """``[(E_i)_uv for each distinct eigenvalue]``, from a direct eigendecomposition of ``A``."""
    return [float(e[u, v]) for e in oracle_idempotents(g, tol).matrices]


def _partition_for(g, u, seed):
    if seed == "refined":
        return vertex_partition(g, u)
    if seed == "distance":
        return distance_partition(g, u)
    raise ValueError(f"seed must be 'refined' or 'distance', got {seed!r}")


def vertex_quotient(g, u, seed="refined"):
    """Quotient matrix hung from ``u`` (coarsest equitable, or the distance partition)."""
    return quotient_matrix(g, _partition_for(g, u, seed))


def local_spectrum_of_quotient(b, tol=DEFAULT_TOL):
    b = _as_quotient(b)
    _require_hung(b)
    qe = quotient_eigen(b, tol)
    pairs = [
        (tau, float(e[0, 0]))
        for tau, e in zip(qe.spectrum.values, qe.idempotents)
        if e[0, 0] > tol
    ]
    return LocalSpectrum(
        _vertex_of(b), tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), b
    )


def local_spectrum(g, u, *, seed="refined", tol=DEFAULT_TOL):
    """The ``u``-local spectrum ``{tau^{m_u(tau)}}`` read off the quotient hung from ``u``.

    >>> from quospec.families import cycle
    >>> [round(m, 12) for m in local_spectrum(cycle(4), 0).multiplicities]
    [0.25, 0.5, 0.25]
    """
    return local_spectrum_of_quotient(vertex_quotient(g, u, seed), tol)


def walks_from_crossed(table, length):
    """``sum_i m_uv(theta_i) theta_i**length`` per cell, as floats."""
    if length < 0:
        raise ValueError(f"walk length must be non-negative, got {length}")
    powers = np.asarray(table.eigenvalues, dtype=float) ** length
    return powers @ table.table


def simple_eigenvalue_multiplicity(b, i, *, left=None, right=None):
    """Crossed multiplicities of a simple quotient eigenvalue from one eigenvector pair.

    Computes ``v_1 u_j / (<u, v> |V_j|)`` per cell ``j``. Without explicit
    vectors the row of ``Q^{-1}`` and column of ``Q`` are used, which is the
    same value with ``<u, v> = 1``. The result does not depend on how ``left``
    and ``right`` are scaled.

    Parameters
    ----------
    b : QuotientMatrix or array_like
    i : int
        Index into the distinct eigenvalues of ``B`` (decreasing).
    left, right : array_like, optional
        A left and a right eigenvector of ``B`` for that eigenvalue.
    """
    b = _as_quotient(b)
    qe = quotient_eigen(b)
    if qe.spectrum.multiplicities[i] != 1:
        raise ValueError(
            f"eigenvalue {qe.spectrum.values[i]!r} of B has multiplicity "
            f"{qe.spectrum.multiplicities[i]}, expected 1"
        )
    (col,) = qe.columns(i)
    v = qe.right[:, col] if right is None else np.asarray(right, dtype=float)
    u = qe.left[col] if left is None else np.asarray(left, dtype=float)
    inner = float(u @ v)
    if abs(inner) <= 1e-12 * np.linalg.norm(u) * np.linalg.norm(v):
        raise ValueError("left and right eigenvectors are orthogonal")
    return v[0] * u / (inner * np.asarray(b.cell_sizes, dtype=float))


def _round_multiplicities(values, raw, residual=ROUNDING_RESIDUAL):
    rounded = []
    for theta, x in zip(values, raw):
        r = round(float(x))
        if abs(x - r) >= residual:
            raise NumericalError(
                f"multiplicity {x!r} of eigenvalue {theta!r} is not within {residual} of an integer"
            )
        rounded.append(r)
    return rounded


def is_walk_regular(g, tol=DEFAULT_TOL):
    """True iff the number of closed walks of length ``l`` is the same at every vertex, ``l = 0..d``.

    ``d + 1`` is the number of distinct eigenvalues; larger lengths follow.
    Walk counts are exact integers.
    """
    if is_regular(g) is None:
        return False
    d = len(dedup_eigenvalues(symmetric_eigen(g.adjacency).eigenvalues, tol)) - 1
    power = np.eye(g.n, dtype=np.int64)
    for _ in range(d + 1):
        diag = np.diag(power)
        if (diag != diag[0]).any():
            return False
        power = checked_matmul(power, g.adjacency)
    return True


def walk_regular_multiplicities(g, u=0, tol=DEFAULT_TOL):
    """Whole spectrum of a walk-regular graph from the quotient hung from one vertex.

    ``m(theta_i) = n * Ebar_i[0, 0]``, rounded with an explicit residual check.
    """
    if not is_walk_regular(g, tol):
        raise ValueError("graph is not walk-regular")
    qe = quotient_eigen(vertex_quotient(g, u), tol)
    raw = [g.n * e[0, 0] for e in qe.idempotents]
    mults = _round_multiplicities(qe.spectrum.values, raw)
    if sum(mults) != g.n:
        raise NumericalError(f"multiplicities {mults} do not sum to n={g.n}")
    return Spectrum(qe.spectrum.values, mults)


def local_spectra(g, *, seed="refined", tol=DEFAULT_TOL, jobs=1):
    """Local spectrum of every vertex, in vertex order.

    Vertices whose quotients coincide share a single computation.
    """
    quotients = [vertex_quotient(g, u, seed) for u in range(g.n)]
    unique = {}
    for q in quotients:
        unique.setdefault(q.key(), q)
    keys = list(unique)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda k: local_spectrum_of_quotient(unique[k], tol), keys))
    else:
        results = [local_spectrum_of_quotient(unique[k], tol) for k in keys]
    by_key = dict(zip(keys, results))
    out = []
    for u, q in enumerate(quotients):
        shared = by_key[q.key()]
        out.append(LocalSpectrum(u, shared.values, shared.multiplicities, q))
    return out


def _union_eigenvalues(spectra, tol):
    values = sorted((x for s in spectra for x in s.values), reverse=True)
    return dedup_eigenvalues(values, tol).values


def graph_eigenvalues(g, *, seed="refined", tol=DEFAULT_TOL, jobs=1):
    """Distinct eigenvalues of ``g`` as the union of all local spectra."""
    return _union_eigenvalues(local_spectra(g, seed=seed, tol=tol, jobs=jobs), tol)


def reconstruct_spectrum(g, *, seed="refined", tol=DEFAULT_TOL, jobs=1):
    """Full spectrum from local spectra: ``m(theta) = sum_u m_u(theta)``.

    The adjacency matrix is never diagonalised. Sums run in vertex order so
    results are reproducible regardless of ``jobs``.
    """
    spectra = local_spectra(g, seed=seed, tol=tol, jobs=jobs)
    values = _union_eigenvalues(spectra, tol)
    totals = [0.0] * len(values)
    for s in spectra:
        for tau, mult in s:
            k = int(np.argmin([abs(tau - t) for t in values]))
            totals[k] += mult
    return Spectrum(values, _round_multiplicities(values, totals))


def crossed_table(g, u, *, seed="refined", method="lagrange", tol=DEFAULT_TOL):
    """Crossed multiplicity table of ``u`` with graph eigenvalues taken from all local spectra."""
    b = vertex_quotient(g, u, seed)
    thetas = graph_eigenvalues(g, seed=seed, tol=tol)
    if method == "lagrange":
        return crossed_via_lagrange(b, thetas)
    if method == "idempotent":
        return crossed_via_quotient_idempotents(b, thetas)
    raise ValueError(f"method must be 'lagrange' or 'idempotent', got {method!r}")


def _is_tridiagonal(m):
    i, j = np.nonzero(m)
    return bool(np.all(np.abs(i - j) <= 1))


def distance_regular_multiplicity(b, n):
    """Multiplicities ``n / <u_i, v_i>`` of a distance-regular graph from its intersection matrix.

    Eigenvectors are scaled to have first entry 1.
    """
    b = _as_quotient(b)
    if not _is_tridiagonal(b.matrix):
        raise ValueError("intersection matrix must be tridiagonal")
    qe = quotient_eigen(b)
    if any(m != 1 for m in qe.spectrum.multiplicities):
        raise ValueError(f"eigenvalues of B must be simple: {qe.spectrum}")
    raw = []
    for k in range(b.m):
        v, u = qe.right[:, k], qe.left[k]
        if abs(v[0]) < 1e-12 or abs(u[0]) < 1e-12:
            raise NumericalError(f"eigenvector for {qe.eigenvalues[k]!r} has zero first entry")
        raw.append(n / float((u / u[0]) @ (v / v[0])))
    return Spectrum(qe.spectrum.values, _round_multiplicities(qe.spectrum.values, raw))
