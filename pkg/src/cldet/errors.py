"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid or inconsistent configuration."""


class DatasetError(ValueError):
    """Malformed dataset, manifest, or sample record."""


class RoutingError(LookupError):
    """Task id has no detection-head route."""


class CheckpointError(RuntimeError):
    """Unreadable or incompatible checkpoint."""


class EmptyMemoryError(RuntimeError):
    """Rehearsal memory holds no samples."""


class TrainingDiverged(RuntimeError):
    """Non-finite loss encountered during training."""
