"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Inputs whose shapes or index ranges do not fit the declared space."""


class DomainError(ValueError):
    """Inputs outside the mathematical domain of an operation."""


class OrthochronousError(DomainError):
    """Matrix is not a proper orthochronous transformation of the form."""


class BranchError(DomainError):
    """Rotation angle pi: the principal matrix logarithm is ambiguous."""


class ClosureError(ValueError):
    """Structure constants violate the reductive split or the Jacobi identity."""
