"""Shared exception types."""


class InconsistencyError(RuntimeError):
    """A mathematically guaranteed identity failed.

    Raised when two independent computation routes disagree or a theorem-backed
    assertion is violated.  This always indicates a bug in the package, never
    bad user input (bad input raises ValueError).
    """
