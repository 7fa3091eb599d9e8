"""Error types for the training harness."""


class HarnessError(Exception):
    """Base class for all harness errors."""


class DataError(HarnessError):
    """Manifest or image data is missing or malformed."""


class TrainingError(HarnessError):
    """The dataset cannot support training (e.g. a single class)."""
