"""Exception types raised across the package."""


class HankelError(Exception):
    """Base class for all package errors."""


class ParseError(HankelError, ValueError):
    def __init__(self, token, position, kind="token"):
        self.token = token
        self.position = position
        self.kind = kind
        super().__init__(f"not an integer at {kind} {position}: {token!r}")


class EmptySequence(HankelError, ValueError):
    pass


class SequenceIOError(HankelError, OSError):
    pass


class SequenceTooShort(HankelError, IndexError):
    def __init__(self, missing_index):
        self.missing_index = missing_index
        super().__init__(f"sequence too short: need a_{missing_index}")


class NotSquare(HankelError, ValueError):
    pass


class DimensionCapExceeded(HankelError, ValueError):
    pass


class MethodUnavailable(HankelError, ValueError):
    pass


class InternalExactDivisionViolation(HankelError, ArithmeticError):
    """A division that must be exact left a remainder. Always a bug."""
