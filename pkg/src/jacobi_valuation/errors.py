class ParameterError(ValueError):
    """Raised when (ell, f, q, g) do not describe a valid setup."""


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""
