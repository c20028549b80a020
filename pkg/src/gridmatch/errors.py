"""Exception types shared across the package."""


class GridmatchError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(GridmatchError, ValueError):
    """A caller violated an operation's precondition."""


class SizeLimitError(GridmatchError):
    """Input exceeds a configured size bound (e.g. isomorphism search cap)."""


class ResourceLimitError(GridmatchError):
    """A computation hit its face/memory budget.

    Attributes:
        dimension: dimension being enumerated when the budget tripped,
            or None when the limit is global.
    """

    def __init__(self, message, dimension=None):
        super().__init__(message)
        self.dimension = dimension
