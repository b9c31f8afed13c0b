# -*- coding: utf-8 -*-
"""Exceptions raised by the solver library.

Every exception carries the ``exit_status`` that the command line interface returns when it is not handled: ``2`` for
geometry and stencil failures, ``3`` for solver failures. Input/output failures are plain ``OSError`` and map to ``4``.
"""

__all__ = (
    'StokesDarcyError', 'GeometryError', 'RegionOverlapError', 'DegenerateCurveError', 'CurveEscapedDomainError',
    'UnmatchedInterfaceNodeError', 'StencilError', 'InsufficientNeighborsError', 'SingularStarError',
    'NotPositiveDefiniteError', 'MissingStencilError', 'SolverError', 'SingularSystemError', 'NonPositiveError',
    'ManufacturedInconsistencyError', 'EXIT_STATUS_IO'
)

EXIT_STATUS_IO = 4


class StokesDarcyError(Exception):
    """Base class for all exceptions of this package."""

    exit_status = 1


class GeometryError(StokesDarcyError):
    """Raised when the geometry of the problem cannot be discretized."""

    exit_status = 2


class RegionOverlapError(GeometryError):
    """Raised when the interface leaves the global domain or the subdomains overlap."""


class DegenerateCurveError(GeometryError):
    """Raised when the parametric interface curve is degenerate at a sampled parameter."""


class CurveEscapedDomainError(GeometryError):
    """Raised when a moved interface curve leaves the global rectangle."""


class UnmatchedInterfaceNodeError(GeometryError):
    """Raised when an interface node has no valid partner on the other side."""


class StencilError(StokesDarcyError):
    """Raised when a derivative stencil cannot be constructed."""

    exit_status = 2


class InsufficientNeighborsError(StencilError):
    """Raised when a node has fewer admissible neighbours than the requested star size."""


class NotPositiveDefiniteError(StencilError):
    """Raised when a Cholesky pivot falls below the threshold."""


class SingularStarError(StencilError):
    """Raised when the normal equations of a star are numerically singular, e.g. for a collinear star."""


class MissingStencilError(StencilError):
    """Raised when the assembly requires the stencil of a node that has none."""


class ManufacturedInconsistencyError(StokesDarcyError):
    """Raised when a registered forcing disagrees with the operator applied to the exact fields."""

    exit_status = 2


class SolverError(StokesDarcyError):
    """Raised when the coupled linear system cannot be solved."""

    exit_status = 3


class SingularSystemError(SolverError):
    """Raised when the factorization of the coupled system breaks down."""


class NonPositiveError(ValueError):
    """Raised when an error value passed to a convergence fit is not strictly positive."""
