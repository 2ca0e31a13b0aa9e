"""Exceptions for the tiling library."""


class InvalidParameters(ValueError):
    """Raised when a parameter tuple violates a precondition."""


class FormulaDomainError(ArithmeticError):
    """Raised when a closed form divides by zero."""


class NonIntegralValue(ArithmeticError):
    """Raised when a value that must be an integer is not."""


class InvalidRegion(ValueError):
    """Raised when an invalid region is encountered."""


class InvalidCut(ValueError):
    """Raised when a cut does not satisfy the separating condition."""


class ResourceCapExceeded(RuntimeError):
    """Raised when a graph is too large for the requested engine."""


class InvalidConfiguration(ValueError):
    """Raised when a configuration file is rejected."""
