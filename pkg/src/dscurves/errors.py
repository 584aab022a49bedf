"""Exception types shared across the package."""


class DSError(Exception):
    """Base class for all package errors."""


class InputError(DSError):
    """Malformed or out-of-domain input (bad syntax, non prime power, ...)."""


class NotACurveError(DSError):
    """Point-count or place data violates an integrality/positivity constraint.

    Carries the first failing index when known.
    """

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


class SizeLimitError(DSError):
    """Requested object exceeds a configured size guard."""


class ValidationError(DSError):
    """Model fails a structural precondition (singular, reducible, ...)."""
