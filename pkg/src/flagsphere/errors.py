"""Exception hierarchy shared by the library and the CLI.

Two branches matter for exit codes: ``InputError`` (bad data or arguments,
exit 2) and ``InapplicableError`` (a request that does not apply to the
given complex, exit 3).
"""


class FlagsphereError(Exception):
    """Base class for every error raised by this package."""


class InputError(FlagsphereError):
    """Malformed or out-of-range input."""


class InapplicableError(FlagsphereError):
    """Operation whose precondition the given complex does not meet."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class InvalidVertex(InputError):
    pass


class EmptyInput(InputError):
    pass


class EmptyComplex(InputError):
    pass


class NotAVertex(InputError):
    pass


class DimensionOutOfRange(InputError):
    pass


class TooSmall(InputError):
    pass


class BadProbability(InputError):
    pass


class UnknownGenerator(InputError):
    pass


class CapExceeded(InputError):
    pass


class NotDivisible(InapplicableError):
    pass


class NotPalindromic(InapplicableError):
    pass


class WrongParity(InapplicableError):
    pass


class NotASphere(InapplicableError):
    pass
