"""Exceptions raised by qcatalog.

Each class also derives from the builtin exception a caller would expect, so
``except ValueError`` keeps working for code that does not know about this module.
"""

__all__ = [
    "QCatalogError",
    "DimensionMismatchError",
    "NotSelfAdjointError",
    "NotAProjectorError",
    "NotNormalizedError",
    "ImpossibleOutcomeError",
    "EmptySelectionError",
    "MalformedSpecError",
    "InvariantViolationError",
]


class QCatalogError(Exception):
    """Base class of all qcatalog errors."""


class DimensionMismatchError(QCatalogError, ValueError):
    """Operands live in spaces of different dimension."""


class NotSelfAdjointError(QCatalogError, ValueError):
    """A matrix expected to be self-adjoint is not."""


class NotAProjectorError(QCatalogError, ValueError):
    """A matrix expected to be an orthogonal projector is not."""


class NotNormalizedError(QCatalogError, ValueError):
    """A state vector does not have unit norm."""


class ImpossibleOutcomeError(QCatalogError, ValueError):
    """Conditioning on an outcome of (numerically) zero probability."""


class EmptySelectionError(QCatalogError, ValueError):
    """A post-selection matched no records."""


class InvariantViolationError(QCatalogError, RuntimeError):
    """A numerical self-check failed."""


class MalformedSpecError(QCatalogError, ValueError):
    """A JSON state or observable document cannot be understood."""
