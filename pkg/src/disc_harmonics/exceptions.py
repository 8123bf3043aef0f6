class DomainError(ValueError):
    """A numeric argument lies outside the domain of an operation (r >= 1, p < 1, ...)."""


class SpecError(ValueError):
    """Malformed boundary specification (bad JSON, unknown preset, wrong sample count)."""
