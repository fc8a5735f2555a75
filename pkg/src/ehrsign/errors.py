"""Exception types shared across the package."""


class ConstructionError(ValueError):
    """A construction violates a structural rule (degenerate simplex, non-convex polygon, ...)."""


class InvalidParameterError(ValueError):
    """A numeric parameter is outside its allowed range."""


class NotEhrhartError(ValueError):
    """A polynomial fails a property every lattice Ehrhart polynomial must have."""


class DimensionMismatchError(ValueError):
    """Incompatible dimensions between arguments."""


class StrictSignError(ValueError):
    """A sign pattern contains a zero where a strict (nonzero) sign is required."""


class NotAffineInParameterError(ValueError):
    """Coefficients of a parametric family fail to depend affinely on the parameter."""


class ResourceLimitError(RuntimeError):
    """Estimated or actual work exceeds a configured cap.

    ``estimate`` carries the offending size (lattice-point estimate or
    normalized volume) so callers can report it.
    """

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


class ParseError(ValueError):
    """DSL syntax error, with byte offset and the tokens that were expected."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.offset = offset
        self.expected = expected
