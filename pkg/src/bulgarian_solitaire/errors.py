class ResourceLimitError(RuntimeError):
    """An enumeration exceeded its node budget."""


class NoFit(ValueError):
    """No rational function within the degree bounds reproduces the series."""

    def __init__(self, message: str, depth: int | None = None):
        super().__init__(message)
        self.depth = depth
