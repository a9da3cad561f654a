"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Shapes or index sets are incompatible with the requested operation."""


class ResourceLimitError(RuntimeError):
    """An exact sweep would exceed a hard size cap; refusing rather than subsampling."""
