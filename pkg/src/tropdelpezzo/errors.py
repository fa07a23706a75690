"""Exception hierarchy shared by every module.

Each exception carries the process exit status the CLI reports for it, so
callers deep inside the library never need to know about exit codes.
"""

from __future__ import annotations

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NON_GENERIC = 2
EXIT_RESOURCE_CAP = 3
EXIT_USAGE = 64


class TropError(Exception):
    """Base class for all library errors."""

    exit_code: int = EXIT_FAILURE


class StructuralError(TropError):
    """A cell, complex, tree family or index vector is malformed."""


class LookupFailure(TropError, LookupError):
    """A vertex, label or direction class does not exist."""


class DomainError(TropError, ValueError):
    """An argument lies outside the domain of an operation."""


class LabelingError(TropError):
    """Ray directions or leaf sets cannot be matched to line labels."""


class RealizationError(TropError):
    """A divisor admits no piecewise integer affine function."""


class ConsistencyError(TropError):
    """Two independent computations of the same object disagree."""


class UnsupportedError(TropError):
    """The requested parameters are outside the supported range."""


class NonGenericError(TropError):
    """Input data is degenerate or not in general position."""

    exit_code = EXIT_NON_GENERIC

    def __init__(self, condition: str) -> None:
        """Store the first violated genericity condition."""
        super().__init__(f"non-generic input: {condition}")
        self.condition = condition


class ResourceCapError(TropError):
    """An enumeration exceeded its configured cap."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, what: str, cap: int, reached: int) -> None:
        """Record the cap and how far the computation got."""
        super().__init__(f"{what} exceeded cap {cap} (reached {reached})")
        self.cap = cap
        self.reached = reached


class UsageError(TropError):
    """Command-line arguments or a run-config file are invalid."""

    exit_code = EXIT_USAGE
