"""Shared exception types."""


class SizeCapError(ValueError):
    """An instance exceeds a configured enumeration size cap."""


class ConstructionError(RuntimeError):
    """A verified geometric construction failed within its retry budget."""
