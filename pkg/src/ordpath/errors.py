"""
Exception hierarchy shared by the ordpath library and CLI.
"""


class OrdpathError(Exception):
    """Base class for every error raised by ordpath."""


class ParseError(OrdpathError):
    """A pattern or host file does not follow its format."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(OrdpathError, ValueError):
    """An operation was called with arguments outside its domain."""


class InvalidPathError(OrdpathError, ValueError):
    """A vertex sequence is not an induced path of the host."""


class CapExceededError(OrdpathError):
    """An exhaustive computation was asked to go beyond its configured cap."""


class BitBudgetExceeded(CapExceededError):
    """Tower arithmetic would need more bits than the configured budget."""

    def __init__(self, message, log2_estimate=None):
        self.log2_estimate = log2_estimate
        super().__init__(message)


class InternalInvariantError(OrdpathError):
    """A constructed object failed re-validation. Always a bug."""
