"""Exception taxonomy shared across the package."""


class HsbError(Exception):
    """Base class for all library errors."""


class ConfigurationError(HsbError):
    """Unsupported root-system family/rank combination."""


class DimensionMismatchError(HsbError):
    """Weight length does not match the root system acting on it."""


class DomainError(HsbError):
    """Input outside an operation's domain (non-dominant weight, bad parameter)."""


class CatalogParseError(HsbError):
    """Malformed catalog document."""


class CatalogValidationError(HsbError):
    """A catalog record failed one of its structural invariants."""


class ResourceLimitError(HsbError):
    """Requested computation exceeds the configured enumeration limits."""

    def __init__(self, message: str, largest_completed_bound: int | None = None):
        super().__init__(message)
        self.largest_completed_bound = largest_completed_bound


class InvariantViolationError(HsbError):
    """An internal consistency guarantee failed; bad embedding data or a bug."""


class UnsupportedRecordError(HsbError):
    """The catalog record does not support the requested computation."""
