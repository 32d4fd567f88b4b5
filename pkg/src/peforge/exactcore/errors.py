"""Exception types raised by the exact arithmetic layer."""


class ExactCoreError(Exception):
    """Base class for errors in exact polynomial / rational-function arithmetic."""


class VariableMismatchError(ExactCoreError, ValueError):
    pass


class FieldMismatchError(ExactCoreError, ValueError):
    pass


class ZeroDenominatorError(ExactCoreError, ZeroDivisionError):
    pass


class DegenerateSubstitutionError(ExactCoreError, ValueError):
    pass


class UnsupportedIntegralError(ExactCoreError, ValueError):
    """Raised when an antiderivative would need a logarithm (a ``t^-1`` term)."""


class PoleError(ExactCoreError, ValueError):
    """A series was requested at a pole; ``order`` is the pole order."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"pole of order {order} at expansion center")
