"""Exception hierarchy shared by the library and the command line."""


class RRGBError(Exception):
    """Base class for every error raised by this package."""


class DescriptorMismatchError(RRGBError, TypeError):
    """An element does not belong to the ring it was used with."""


class ZeroReducerError(RRGBError, ValueError):
    """Zero was used where a nonzero reducer is required."""


class NoLeadingMonomialError(RRGBError, ValueError):
    """The zero polynomial has no leading monomial."""


class ExponentOverflowError(RRGBError, OverflowError):
    """An exponent left the machine-width range."""


class StateCorruptionError(RRGBError, RuntimeError):
    """The completion state violates its own invariants."""


class ContractViolationError(RRGBError, ValueError):
    """An operation was called outside its precondition."""


class MeasureViolationError(RRGBError, AssertionError):
    """The termination measure failed to decrease between two calls."""


class DomainOrderError(RRGBError, RuntimeError):
    """The ring's ordering admitted a reduction cycle."""


class UnsupportedError(RRGBError, ValueError):
    """The request is valid syntax but outside what is implemented."""


class StepLimitExceeded(RRGBError, RuntimeError):
    """Completion ran past its configured number of state transitions."""

    def __init__(self, limit, state=None):
        super().__init__(f"step limit of {limit} state transitions exceeded")
        self.limit = limit
        self.state = state


class ParseError(RRGBError, ValueError):
    """Malformed ring descriptor or element expression."""

    def __init__(self, message, source="", position=None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")
        self.source = source
        self.position = position


class RangeError(ParseError):
    """A numeric parameter is outside its allowed range."""
