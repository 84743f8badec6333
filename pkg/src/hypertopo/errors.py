"""Exception hierarchy shared by all modules."""


class HypertopoError(ValueError):
    """Base class for every error raised by the library."""


class PreconditionError(HypertopoError):
    """An operation was called on input that violates its precondition."""


class SizeLimitError(HypertopoError):
    """Input is larger than the exhaustive algorithm is allowed to handle."""


class InconsistentFamilyError(HypertopoError):
    """A shift family does not obey its own construction law."""
