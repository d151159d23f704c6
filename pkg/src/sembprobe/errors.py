"""Exception types shared across the toolkit."""


class DimensionError(ValueError):
    """Tensor shapes do not match a layer's expectations."""


class ConfigError(ValueError):
    """Invalid configuration value or unusable argument range."""


class CorpusError(ValueError):
    """Unusable corpus input (empty, too small, ids out of range)."""


class CheckpointError(ValueError):
    """Checkpoint file is missing, truncated, or not in the expected format."""


class EmbeddingParseError(ValueError):
    """Malformed embedding file; remembers the offending line when known."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DegenerateStatisticError(ValueError):
    """Statistic undefined for the given sample (e.g. zero variance)."""


class TrainingDiverged(RuntimeError):
    """Training produced a non-finite loss."""
