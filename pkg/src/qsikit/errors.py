"""Exception types shared across the toolkit."""


class QsikitError(Exception):
    """Base class for all toolkit errors."""


class MalformedInputError(QsikitError, ValueError):
    """Input data does not parse or violates basic well-formedness."""


class DomainError(QsikitError, ValueError):
    """Arguments are well-formed but outside an operation's domain."""


class CapacityError(QsikitError):
    """A computation would exceed a configured enumeration bound.

    The message always names the bound that was hit.
    """

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class IntegrityError(QsikitError):
    """A cross-check that should hold by construction failed."""


class NotFoundError(QsikitError, KeyError):
    """A named catalog entry or fixture does not exist."""


class UnsupportedCaseError(QsikitError):
    """The requested case is outside the encoded data tables."""
