"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """A precondition of an operation was violated.

    Raised when the caller's data lies outside an operation's stated
    domain (wrong chamber setting, inadmissible characteristic numbers,
    missing witness data, and so on). The command line maps this to
    exit code 2.
    """


class DimensionMismatchError(DomainError):
    """A vector or matrix does not match the ambient lattice rank."""


class InvalidTopologyError(DomainError):
    """Input data contradicts an identity valid for every closed
    oriented 4-manifold.

    Quantities like the expected dimension of the abelian monopole
    moduli space are integers whenever the input describes an actual
    manifold; a failed integrality or congruence check therefore means
    the data set is inconsistent, never that rounding is called for.
    """


class ManifoldFileError(Exception):
    """A manifold description file could not be parsed.

    Carries the 1-based line and column of the offending token when
    known. The command line maps this to exit code 3.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
