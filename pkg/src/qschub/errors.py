"""Exception types shared across the package."""


class InadmissibleType(ValueError):
    """A (family, rank) pair that names no simple Lie type."""


class BoundExceeded(RuntimeError):
    """A configured enumeration bound would be exceeded."""


class InconsistencyError(ArithmeticError):
    """An exact identity that must hold did not (for example a non-polynomial residue)."""
