"""Exception hierarchy shared across the package.

Every error the CLI turns into a machine-readable error object derives from
:class:`StablekhError` and carries a stable ``code`` string.
"""


class StablekhError(Exception):
    """Base class for all package errors."""

    code = "error"


class DimensionError(StablekhError, ValueError):
    """Matrix shapes incompatible with the requested operation."""

    code = "dimension_error"


class DomainError(StablekhError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    code = "domain_error"


class SchemaError(StablekhError, ValueError):
    """Algebra descriptor document violates the input schema.

    The message names the offending field.
    """

    code = "schema_violation"


class OracleGuardError(StablekhError, ValueError):
    """A brute-force oracle was asked to exceed its size guard."""

    code = "oracle_guard"


class InternalInconsistencyError(StablekhError, RuntimeError):
    """Two independent computations of the same quantity disagreed."""

    code = "internal_inconsistency"
