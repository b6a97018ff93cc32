"""Symmetric eigensolver, eigenvalue clustering and spectral idempotents.

Two independent constructions of the idempotent ``E_i`` of an eigenvalue
``theta_i`` are provided. :func:`idempotents_from_eigen` sums outer products
of an orthonormal eigenbasis. :func:`lagrange_idempotent` evaluates the
Lagrange polynomial ``prod_{j != i} (M - theta_j I) / (theta_i - theta_j)``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousClusteringError, NotEquitableError, NumericalError
from .partition import QuotientMatrix

DEFAULT_TOL = 1e-9

_JACOBI_RTOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Distinct eigenvalues in strictly decreasing order with multiplicities."""

    values: tuple
    multiplicities: tuple

    def __post_init__(self):
        values = tuple(float(x) for x in self.values)
        mults = tuple(self.multiplicities)
        if len(values) != len(mults):
            raise ValueError("need one multiplicity per eigenvalue")
        if any(a <= b for a, b in zip(values, values[1:])):
            raise ValueError(f"eigenvalues must be strictly decreasing: {values}")
        if any(m <= 0 for m in mults):
            raise ValueError(f"multiplicities must be positive: {mults}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "multiplicities", mults)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(zip(self.values, self.multiplicities))

    @property
    def dimension(self):
        return sum(self.multiplicities)

    def index_of(self, value, atol):
        """Index of the eigenvalue closest to ``value`` if within ``atol``, else ``None``."""
        if not self.values:
            return None
        gaps = np.abs(np.asarray(self.values) - value)
        k = int(np.argmin(gaps))
        return k if gaps[k] <= atol else None

    def __repr__(self):
        # Rounding noise around zero is shown as 0.
        body = ", ".join(f"{0.0 if abs(v) < 1e-12 else v:.6g}^{m}" for v, m in self)
        return f"Spectrum({{{body}}})"


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues in descending order, column ``k`` of ``eigenvectors`` pairing with value ``k``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True, eq=False)
class IdempotentSet:
    spectrum: Spectrum
    matrices: tuple

    def __len__(self):
        return len(self.matrices)

    def __getitem__(self, i):
        return self.matrices[i]


@dataclass(frozen=True, eq=False)
class QuotientEigen:
    """Diagonalisation ``Q^{-1} B Q = D`` of a quotient matrix.

    Attributes
    ----------
    spectrum : Spectrum
        Distinct eigenvalues ``tau_0 > ... > tau_e`` of ``B``.
    eigenvalues : ndarray
        Diagonal of ``D``, descending, with repetition.
    right : ndarray
        ``Q``; column ``k`` is a right eigenvector for ``eigenvalues[k]``.
    left : ndarray
        ``Q^{-1}``; row ``k`` is the matching left eigenvector, scaled so
        that ``left[k] @ right[:, k] == 1``.
    idempotents : tuple of ndarray
        ``Ebar_i = V_i U_i``, one per distinct eigenvalue.
    """

    spectrum: Spectrum
    eigenvalues: np.ndarray
    right: np.ndarray
    left: np.ndarray
    idempotents: tuple

    def columns(self, i):
        """Column indices of ``Q`` belonging to distinct eigenvalue ``i``."""
        start = sum(self.spectrum.multiplicities[:i])
        return list(range(start, start + self.spectrum.multiplicities[i]))


def symmetric_eigen(m, tol=DEFAULT_TOL):
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Sweeps rotate every pair ``(p, q)``, ``p < q``, in row-major order until
    the off-diagonal Frobenius norm drops below ``1e-12 * ||M||_F``.

    Parameters
    ----------
    m : array_like
        Square matrix, symmetric to within ``tol`` (scaled by its largest entry).
    tol : float
        Symmetry tolerance.

    Returns
    -------
    EigenDecomposition
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    asym = np.abs(a - a.T)
    if n and asym.max() > tol * max(1.0, np.abs(a).max()):
        p, q = np.unravel_index(int(np.argmax(asym)), asym.shape)
        raise ValueError(
            f"matrix is not symmetric: |M[{p},{q}] - M[{q},{p}]| = {asym[p, q]:.3e}"
        )
    a = (a + a.T) / 2
    v = np.eye(n)
    threshold = _JACOBI_RTOL * np.linalg.norm(a)
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) * 1e150 < abs(diff):
                    # Small-angle limit t ~ 1 / (2 tau) without forming tau.
                    t = apq / diff
                else:
                    tau = diff / (2.0 * apq)
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        raise NumericalError(f"Jacobi did not converge in {_JACOBI_MAX_SWEEPS} sweeps")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values[order], v[:, order])


def dedup_eigenvalues(values, tol=DEFAULT_TOL):
    """Cluster a descending list of eigenvalues into a :class:`Spectrum`.

    Neighbours closer than ``tol * max(1, |value|)`` join one cluster,
    represented by its mean. A chain longer than ten tolerances is ambiguous
    and raises :class:`AmbiguousClusteringError`.

    >>> dedup_eigenvalues([2.0, 0.0, 0.0, -2.0])
    Spectrum({2^1, 0^2, -2^1})
    """
    values = [float(x) for x in values]
    if any(a < b for a, b in zip(values, values[1:])):
        raise ValueError("values must be sorted in descending order")
    clusters = []
    for x in values:
        if clusters and clusters[-1][-1] - x <= tol * max(1.0, abs(x)):
            clusters[-1].append(x)
        else:
            clusters.append([x])
    for c in clusters:
        if c[0] - c[-1] > 10 * tol * max(1.0, abs(c[0]), abs(c[-1])):
            raise AmbiguousClusteringError(
                f"cluster [{c[-1]!r}, {c[0]!r}] spans more than 10*tol; choose another tol"
            )
    return Spectrum([sum(c) / len(c) for c in clusters], [len(c) for c in clusters])


def idempotents_from_eigen(dec, spec):
    """``E_i = V_i V_i^T`` from the orthonormal eigenvectors grouped as in ``spec``."""
    if spec.dimension != len(dec.eigenvalues):
        raise ValueError("spectrum multiplicities do not match the decomposition")
    matrices = []
    start = 0
    for mult in spec.multiplicities:
        vi = dec.eigenvectors[:, start:start + mult]
        matrices.append(vi @ vi.T)
        start += mult
    return IdempotentSet(spec, tuple(matrices))


def lagrange_idempotent(m, spec, i):
    """Evaluate the ``i``-th Lagrange interpolation polynomial of ``spec`` at ``m``.

    ``spec`` is a :class:`Spectrum` or a sequence of distinct eigenvalues. A
    single eigenvalue gives the identity.
    """
    thetas = list(spec.values if isinstance(spec, Spectrum) else spec)
    m = np.asarray(m, dtype=float)
    size = m.shape[0]
    theta_i = float(thetas[i])
    result = np.eye(size)
    phi = 1.0
    for j, theta_j in enumerate(thetas):
        if j == i:
            continue
        gap = theta_i - theta_j
        if gap == 0.0:
            raise ValueError(f"repeated eigenvalue {theta_j!r} in spectrum")
        result = result @ (m - theta_j * np.eye(size))
        phi *= gap
    return result / phi


def lagrange_idempotents(m, spec):
    return [lagrange_idempotent(m, spec, i) for i in range(len(spec))]


def quotient_eigen(b, tol=DEFAULT_TOL):
    """Diagonalise an equitable quotient by diagonal scaling.

    With ``D = diag(sqrt(|V_i|))`` the matrix ``D B D^{-1}`` is symmetric,
    because ``diag(|V_i|) B = S^T A S``. Its orthonormal eigenvectors ``w``
    map back to right eigenvectors ``D^{-1} w`` and left eigenvectors
    ``w^T D`` of ``B`` with unit pairing.
    """
    if not isinstance(b, QuotientMatrix):
        b = QuotientMatrix.from_matrix(b)
    scale = np.sqrt(np.asarray(b.cell_sizes, dtype=float))
    sym = scale[:, None] * b.matrix / scale[None, :]
    asym = np.abs(sym - sym.T).max() if b.m else 0.0
    if asym > tol * max(1.0, np.abs(sym).max()):
        raise NotEquitableError(
            f"not an equitable quotient: scaled matrix asymmetric by {asym:.3e}"
        )
    dec = symmetric_eigen(sym, tol)
    spec = dedup_eigenvalues(dec.eigenvalues, tol)
    right = dec.eigenvectors / scale[:, None]
    left = dec.eigenvectors.T * scale[None, :]
    idempotents = []
    start = 0
    for mult in spec.multiplicities:
        cols = slice(start, start + mult)
        idempotents.append(right[:, cols] @ left[cols, :])
        start += mult
    return QuotientEigen(spec, dec.eigenvalues, right, left, tuple(idempotents))


def oracle_eigen(m):
    """LAPACK ``eigh`` reordered to descending; independent of :func:`symmetric_eigen`."""
    values, vectors = np.linalg.eigh(np.asarray(m, dtype=float))
    return EigenDecomposition(values[::-1].copy(), vectors[:, ::-1].copy())
