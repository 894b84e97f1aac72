"""Exception types shared across the library."""


class CapExceededError(ValueError):
    """An operation would exceed a configured size limit.

    ``count`` carries the number of items the operation would have generated,
    so callers can report it.
    """

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class ShapeError(ValueError):
    """Operands have incompatible shapes (word sizes or matrix dimensions)."""


class UnsupportedAlphabetError(ValueError):
    """The operation is defined only for two-letter words."""
