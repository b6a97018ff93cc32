import numpy as np

from .errors import WalkCountOverflowError

# Headroom below 2**63: the float bound is exact up to relative 1e-16.
_LIMIT = float(2**62)


def checked_matmul(x, y):
    """Exact int64 product ``x @ y``; raises instead of wrapping on overflow."""
    bound = np.abs(x).astype(float) @ np.abs(y).astype(float)
    if bound.size and bound.max() >= _LIMIT:
        raise WalkCountOverflowError(
            f"integer matrix product exceeds 2**62 (bound {bound.max():.3e})"
        )
    return np.asarray(x, dtype=np.int64) @ np.asarray(y, dtype=np.int64)


def checked_power(m, exponent):
    """Exact integer ``m ** exponent`` by repeated multiplication."""
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    m = np.asarray(m, dtype=np.int64)
    result = np.eye(m.shape[0], dtype=np.int64)
    for _ in range(exponent):
        result = checked_matmul(result, m)
    return result
