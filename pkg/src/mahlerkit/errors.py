"""Exception types shared across mahlerkit."""


class MahlerError(Exception):
    """Base class for library errors."""


class PrecisionError(MahlerError):
    """A truncated series does not carry enough terms for the requested operation."""


class SystemBuildError(MahlerError):
    """Reconstructed system matrices failed exact verification (retry with larger caps)."""


class SeedInconsistentError(MahlerError):
    """The seed does not extend to a common solution of the given equations."""

    def __init__(self, outcome, message=None):
        self.outcome = outcome
        super().__init__(message or str(outcome))


class PoleProximityError(MahlerError):
    """A floating-point evaluation point lies too close to a pole."""
