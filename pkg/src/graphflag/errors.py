"""Shared exception types."""


class GraphParseError(ValueError):
    """Raised when graph text does not match the input grammar."""


class SizeLimitError(ValueError):
    """Raised when an input exceeds a documented size bound."""
