"""Exception hierarchy shared by the simulator modules and the CLI."""


class AnyonOpticsError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(AnyonOpticsError, ValueError):
    """A mode index, particle count or similar argument is out of range."""


class ResourceLimitError(AnyonOpticsError):
    """The requested dense representation would be too large."""


class PreconditionError(AnyonOpticsError, ValueError):
    """An input matrix fails a numerical precondition (Hermitian, unitary)."""


class CodeSpaceError(AnyonOpticsError):
    """A state is outside the dual-rail code space where it must be inside."""


class DocumentError(AnyonOpticsError, ValueError):
    """A circuit document could not be parsed or failed validation."""


class ConsistencyError(AnyonOpticsError):
    """Internal numerical consistency check failed (e.g. state not normalized)."""
