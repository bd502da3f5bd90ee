"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the validity domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation failed to reach the requested tolerance.

    The best partial result, when one exists, is attached as ``partial``
    (a QuadratureResult or SeriesResult).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
