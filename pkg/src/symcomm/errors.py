"""Exception hierarchy.  The CLI maps these onto exit codes."""


class SymcommError(Exception):
    pass


class ArgumentError(SymcommError, ValueError):
    """Bad input: out-of-range parameters, non-membership, malformed data."""


class UnsupportedFamilyError(ArgumentError):
    pass


class NotCommutingError(ArgumentError):
    """Raised when a pair (x, y) is required to commute and does not."""

    def __init__(self, message: str, first_entry=None):
        super().__init__(message)
        self.first_entry = first_entry


class ClassificationError(SymcommError, ValueError):
    pass


class InternalError(SymcommError, RuntimeError):
    """A self-check failed.  This points at a bug, never at bad luck."""
