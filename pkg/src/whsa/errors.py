"""Shared exception types."""


class CapExceededError(ValueError):
    """An input exceeded a documented size cap for exhaustive enumeration."""
