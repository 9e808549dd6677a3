"""Exception types shared across the package."""


class SizeLimitError(ValueError):
    """An input exceeds a factorial- or exponential-time size cap."""


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""
