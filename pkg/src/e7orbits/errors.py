class E7OrbitsError(Exception):
    """Base class for all package errors."""


class InternalCheckError(E7OrbitsError):
    """A structural cardinality or consistency check failed.

    This signals a bug (wrong basis, sign convention, corrupted data), never
    bad user input.
    """


class ResourceLimitError(E7OrbitsError):
    """A computation would exceed a configured size or memory budget."""


class CacheMismatchError(E7OrbitsError):
    """A census cache file does not belong to the current build."""
