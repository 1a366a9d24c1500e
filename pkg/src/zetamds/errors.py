"""Exception types shared across the package.

Everything derives from ZetaMdsError so callers can catch the package's
failures with a single except clause; the CLI maps subtrees of this
hierarchy to exit codes.
"""


class ZetaMdsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ZetaMdsError):
    """A line of a zero-list file is not a decimal literal."""

    def __init__(self, line_no, token):
        self.line_no = line_no
        self.token = token
        super().__init__(f"line {line_no}: not a decimal literal: {token!r}")


class MonotonicityError(ZetaMdsError):
    """Consecutive zero ordinates are not strictly increasing."""

    def __init__(self, line_no, value, previous):
        self.line_no = line_no
        self.value = value
        self.previous = previous
        super().__init__(
            f"line {line_no}: ordinate {value!r} does not exceed its predecessor {previous!r}"
        )


class EmptyInputError(ZetaMdsError):
    """Zero-list file contained no data lines."""


class InvalidWindowError(ZetaMdsError):
    """Window length is zero or exceeds the available zero list."""


class DimensionError(ZetaMdsError):
    """Vector arguments of mismatched length."""


class DegenerateInputError(ZetaMdsError):
    """Input outside a metric's domain (e.g. zero vector for Arccosine)."""


class RangeError(ZetaMdsError):
    """Ordinate outside the zeta oracle's guaranteed accuracy range."""


class ConvergenceError(ZetaMdsError):
    """Eigensolver failed to converge within its iteration budget."""


class DimensionUnavailableError(ZetaMdsError):
    """Requested more embedding dimensions than positive eigenvalues."""

    def __init__(self, requested, available):
        self.requested = requested
        self.available = available
        super().__init__(
            f"requested {requested} embedding dimensions but only "
            f"{available} positive eigenvalues are available"
        )


class DegenerateSeriesError(ZetaMdsError):
    """Series is constant (or identically zero); no sinusoid can be fitted."""


class InsufficientDataError(ZetaMdsError):
    """Too few samples for the requested fit."""


class DomainError(ZetaMdsError):
    """Fit input outside the model's domain (e.g. non-positive value on a log axis)."""


class MemoryLimitError(ZetaMdsError):
    """Dense distance matrix would exceed the supported size."""
