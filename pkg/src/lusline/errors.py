"""Exception types shared across the pipeline."""


class LuslineError(Exception):
    """Base class for all pipeline errors."""


class DecodeError(LuslineError):
    """Input raster could not be read or decoded."""


class NoContentError(LuslineError):
    """Frame contains no nonzero pixels."""


class ConfigurationError(LuslineError):
    """Invalid parameter combination (raised before any iteration runs)."""


class ConvexityError(ConfigurationError):
    """The gamma >= sqrt(mu)/2 condition is violated."""


class NumericalError(LuslineError):
    """Non-finite values appeared during iteration."""

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration


class NoPleuralLineError(LuslineError):
    """No pleural-line peak found; the frame is rejected."""


class DegenerateSegmentError(LuslineError):
    """Sampled line segment is too short to average over."""


class EvaluationMismatchError(LuslineError):
    """Detection and annotation ids do not align."""

    def __init__(self, message, unmatched_ids=()):
        super().__init__(message)
        self.unmatched_ids = list(unmatched_ids)
