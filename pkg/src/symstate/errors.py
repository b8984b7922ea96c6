"""Exception hierarchy shared by all modules."""


class SymstateError(ValueError):
    """Base class for every error raised by this package."""


class DimensionMismatch(SymstateError):
    pass


class DimensionTooLarge(SymstateError):
    pass


class DimensionTooSmall(SymstateError):
    pass


class NotHermitian(SymstateError):
    pass


class ArityMismatch(SymstateError):
    pass


class ParamOutOfRange(SymstateError):
    pass


class NotPSD(SymstateError):
    pass


class BadNormalization(SymstateError):
    pass


class InvalidDecomposition(SymstateError):
    pass


class ShapeMismatch(SymstateError):
    pass


class NotAState(SymstateError):
    """Raised when a matrix fails one of the density-matrix invariants.

    The ``reason`` attribute names the broken invariant (``"hermitian"``,
    ``"trace"`` or ``"psd"``).
    """

    def __init__(self, message, reason=None):
        super().__init__(message)
        self.reason = reason


class DmatParseError(SymstateError):
    """Malformed DMAT1 text. ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
