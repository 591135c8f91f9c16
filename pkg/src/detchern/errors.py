"""Error types shared across the package."""


class ParameterError(ValueError):
    """A parameter (m, n, k, ...) is outside its documented range."""


class BoxSizeError(ValueError):
    """A Grassmannian box exceeds the configured cell limit."""


class ConsistencyError(RuntimeError):
    """Two independent evaluation routes disagreed; never ignored."""
