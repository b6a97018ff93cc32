"""Exception hierarchy shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph or partition text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedGraphError(ValueError):
    """Raised when a connected graph is required but a vertex is unreachable."""

    def __init__(self, source, unreachable):
        super().__init__(f"vertex {unreachable} is unreachable from vertex {source}")
        self.source = source
        self.unreachable = unreachable


class NotEquitableError(ValueError):
    """A partition (or quotient) failed the equitability test.

    ``witness`` is an :class:`~quospec.partition.Witness` when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NumericalError(ArithmeticError):
    """A floating-point result was too far from the value it must round to."""


class AmbiguousClusteringError(NumericalError):
    """Eigenvalue clustering chained values further apart than the tolerance allows."""


class WalkCountOverflowError(OverflowError):
    """Exact integer walk counts no longer fit in 64-bit accumulators."""
