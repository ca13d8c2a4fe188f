"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: InputError (and its
subclass AxiomError) mean bad input data, CapError means a resource cap
was exceeded, InternalError means a library self-check failed and
indicates a bug rather than bad input.
"""


class MvgError(Exception):
    """Base class for all package errors."""


class InputError(MvgError, ValueError):
    """Invalid input data, parameters, or violated preconditions."""


class AxiomError(InputError):
    """Parameters or a table that fail a defining axiom.

    Carries the verification report so callers can see the witnesses.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CapError(MvgError):
    """A configured size cap was exceeded."""


class InternalError(MvgError, RuntimeError):
    """An internal consistency check failed; indicates a bug."""
