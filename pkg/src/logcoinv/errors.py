"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument lies outside the range where the quantity is defined."""


class ModelMismatchError(ValueError):
    """Operands were built with different exponent denominators."""


class TruncationError(ArithmeticError):
    """A truncated series was asked for information beyond its valid window.

    ``required`` holds the truncation order (in exponent units) the operand
    would have needed, when that is known.
    """

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required
