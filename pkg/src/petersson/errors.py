"""Exception types shared across the package."""


class PrecisionError(ValueError):
    """Raised when a truncated expansion is asked for a coefficient it does not hold."""


class InvariantError(ValueError):
    """Raised when a Jacobi expansion violates the (D, r mod 2m) or r <-> -r symmetry."""


class LatticeError(ValueError):
    """Malformed Gram matrix (not symmetric, odd diagonal, det != 1, not positive)."""


class ResourceCapError(RuntimeError):
    """A search ran into its configured cap; ``partial`` holds what was found."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
