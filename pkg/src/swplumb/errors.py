"""Exception types shared across the package."""


class SwplumbError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(SwplumbError):
    """A matrix required to be invertible has determinant zero."""


class ConductorMismatch(SwplumbError):
    """Cyclotomic operands live in fields with different conductors."""


class NotRational(SwplumbError):
    """A cyclotomic number expected to be rational has nonzero higher coefficients."""


class NotATree(SwplumbError):
    """The plumbing graph is not a connected tree."""


class NotNegativeDefinite(SwplumbError):
    """The intersection form fails negative definiteness.

    Carries the size of the first leading principal minor whose sign does not
    alternate (or which vanishes).
    """

    def __init__(self, size: int, minor: int):
        self.size = size
        self.minor = minor
        super().__init__(
            f"leading principal minor of size {size} equals {minor}; "
            f"a negative definite form needs sign {(-1) ** size}"
        )


class OrderCapExceeded(SwplumbError):
    """The first homology group is larger than the configured cap."""

    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds the cap {cap}")


class InvalidBaseVertex(SwplumbError):
    """The base vertex is inadmissible for the requested regularized product."""


class InternalInvariantViolated(SwplumbError):
    """An internal consistency check failed; indicates a bug or invalid input."""


class NotQHS(SwplumbError):
    """The exponents do not define a rational homology sphere link."""
