"""Exception hierarchy shared by every module."""


class ScissorsError(Exception):
    """Base class for library errors."""


class StructuralError(ScissorsError):
    """Input data violates an invariant of its type (bad table, d^2 != 0, ...)."""


class ContractError(ScissorsError):
    """An operation was called outside its precondition."""


class ParseError(ScissorsError):
    """A text file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceError(ScissorsError):
    """An enumeration exceeded its configured budget."""
