class PoincareError(Exception):
    """Base class for failures raised by this package."""


class SingularMatrix(PoincareError):
    """The linear system is not invertible modulo the working prime."""


class ExhaustedRetries(PoincareError):
    """Sampling kept producing singular systems after all allowed retries."""


class ValidationFailed(PoincareError):
    """A lifted polynomial violated one of its structural invariants."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InexactDivision(PoincareError):
    """A divisibility that the construction relies on did not hold."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder
