"""Exception hierarchy. Each subclass maps to one CLI exit code."""


class PioError(Exception):
    """Base class for errors raised by this package."""


class SpecError(PioError, ValueError):
    """Malformed recurrence specification or argument; ``field`` names the culprit."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class ConsistencyError(PioError, ArithmeticError):
    """An internal self-check failed (Fatou integrality, interpolation verification, ...)."""


class ModulusCapExceeded(PioError):
    def __init__(self, m, cap):
        super().__init__(f"sectioning modulus {m} exceeds cap {cap}")
        self.m = m
        self.cap = cap


class PrecisionExhausted(PioError):
    """Certified numerics could not succeed within the precision cap."""


class BudgetExceeded(PioError):
    """A time-budgeted computation ran out of time; ``progress`` is how far it got."""

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress
