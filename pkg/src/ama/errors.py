"""Exception types shared across the package."""


class AmaError(Exception):
    """Base class for all errors raised by this package."""


class EmptyLayoutError(AmaError):
    """An evaluation was requested on a layout with no objects."""


class ValidationError(AmaError):
    """A layout or document violates an invariant.

    Carries the id of the offending object when one can be named.
    """

    def __init__(self, message, object_id=None):
        super().__init__(message)
        self.object_id = object_id


class ParseError(AmaError):
    """Malformed layout document."""


class DecodeError(AmaError):
    """Malformed image file."""


class DomainError(AmaError):
    """An argument is outside its documented domain."""


class LabelMismatchError(AmaError):
    """Two rankings do not cover the same label set."""


class DegenerateInputError(AmaError):
    """Too few groups or observations for the requested statistic."""


class EmptyInputError(AmaError):
    """An operation that needs at least one item received none."""
