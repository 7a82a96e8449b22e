"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class MsscError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MsscError, ValueError):
    """Malformed or out-of-range input."""


class ParseError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class UncoverableError(InputError):
    """The instance contains an empty hyperedge, so no set cover exists."""


class IncompleteCoverError(InputError):
    """An ordering prefix leaves at least one hyperedge uncovered."""

    def __init__(self, message, edge=None):
        self.edge = edge
        super().__init__(message)


class BudgetExceeded(MsscError, RuntimeError):
    """An exact search or size-capped construction exceeded its budget."""
