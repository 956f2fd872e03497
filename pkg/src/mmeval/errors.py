"""Exception hierarchy shared by all evaluation pipelines."""


class MMEError(Exception):
    """Base class for every error raised by :mod:`mmeval`."""


class InvalidArgumentError(MMEError, ValueError):
    """An argument violates a documented precondition."""


class PoolExhaustedError(MMEError):
    """The supplied prime pool is too small to exceed the requested bound."""


class BoundViolationError(MMEError):
    """A reconstructed evaluation exceeds the caller's declared bit bound."""


class ReconstructionFailedError(MMEError):
    """Rational reconstruction found no convergent meeting the error bound."""


class ParseError(MMEError, ValueError):
    """Malformed instance file.

    Carries the 1-based ``line`` and ``column`` of the offending token when
    they are known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)
