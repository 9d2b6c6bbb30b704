"""Exception types shared across the toolkit."""


class MsrKitError(Exception):
    """Base class for all toolkit errors."""


class DomainError(MsrKitError, ValueError):
    """A numeric argument lies outside its mathematical domain."""


class AudioInputError(MsrKitError, ValueError):
    """Audio input violates an operation's preconditions."""


class RecordValidationError(MsrKitError, ValueError):
    """A record or judgment violates a named invariant."""

    def __init__(self, rule: str, message: str):
        self.rule = rule
        super().__init__(message)


class PackageStateError(MsrKitError, RuntimeError):
    """Write attempted against a submitted package."""


class InsufficientCatalogError(MsrKitError, ValueError):
    """Not enough eligible songs to assemble a package."""


class UndefinedSlopeError(MsrKitError, ValueError):
    """Regression requested over a genre without two distinct tempo values."""

    def __init__(self, genre: str, message: str):
        self.genre = genre
        super().__init__(message)
