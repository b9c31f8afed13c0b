# -*- coding: utf-8 -*-
"""Discrete error norms against the exact fields and empirical convergence orders."""
import dataclasses
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy

from .common.exceptions import NonPositiveError
from .common.types import Field, Side
from .pointcloud.cloud import NodeSet
from .problems.manufactured import ProblemSpec
from .solver import SolutionField
from .stencil.coefficients import StencilSet

__all__ = ('FieldErrors', 'ErrorReport', 'error_norms', 'norms_of', 'convergence_order', 'pairwise_orders',
           'REPORTED_FIELDS', 'NORMS')

LOGGER = logging.getLogger(__name__)

#: Denominators below this value make a relative norm fall back to the absolute one.
ZERO_GUARD = 1E-14

#: Fields of the error report in output order.
REPORTED_FIELDS = ('u_f', 'u_p', 'p', 'phi')

NORMS = ('Linf', 'L2', 'H1')


@dataclasses.dataclass(frozen=True)
class FieldErrors:
    """Absolute and relative errors of one field.

    ``guarded`` names the relative norms whose exact-field denominator vanished; they hold the absolute value instead.
    """

    field: str
    count: int
    absolute: Dict[str, float]
    relative: Dict[str, float]
    guarded: Tuple[str, ...] = ()

    @property
    def Linf(self) -> float:
        return self.absolute['Linf']

    @property
    def L2(self) -> float:
        return self.absolute['L2']

    @property
    def H1(self) -> float:
        return self.absolute['H1']


@dataclasses.dataclass(frozen=True)
class ErrorReport:
    """Errors of all fields of one solve."""

    fields: Dict[str, FieldErrors]
    node_count: int
    cpu_seconds: float = 0.
    residual: Optional[float] = None

    def __getitem__(self, field: str) -> FieldErrors:
        return self.fields[field]


def _magnitude(values: numpy.ndarray) -> numpy.ndarray:
    values = numpy.asarray(values, dtype=float)
    return numpy.abs(values) if values.ndim == 1 else numpy.linalg.norm(values, axis=1)


def _maximum(values: numpy.ndarray) -> float:
    magnitude = _magnitude(values)
    return float(numpy.max(magnitude)) if magnitude.size else 0.


def _root_mean_square(values: numpy.ndarray) -> float:
    magnitude = _magnitude(values)
    return float(numpy.sqrt(numpy.mean(magnitude**2))) if magnitude.size else 0.


def norms_of(
    field: str,
    numeric: numpy.ndarray,
    exact: numpy.ndarray,
    numeric_gradient: numpy.ndarray,
    exact_gradient: numpy.ndarray,
) -> FieldErrors:
    """Return the errors of one field from nodal values and gradients.

    Scalar fields are passed as ``(n,)`` arrays, vector fields and gradients as ``(n, c)`` arrays whose rows are
    combined by their Euclidean magnitude. ``Linf`` is the largest nodal error, ``L2`` the root mean square of the nodal
    errors and ``H1`` the root mean square of the gradient errors.
    """
    error = numpy.asarray(numeric, dtype=float) - numpy.asarray(exact, dtype=float)
    gradient_error = numpy.asarray(numeric_gradient, dtype=float) - numpy.asarray(exact_gradient, dtype=float)

    absolute = {
        'Linf': _maximum(error),
        'L2': _root_mean_square(error),
        'H1': _root_mean_square(gradient_error),
    }
    reference = {
        'Linf': _maximum(exact),
        'L2': _root_mean_square(exact),
        'H1': _root_mean_square(exact_gradient),
    }

    relative = {}
    guarded = []

    for norm in NORMS:
        if reference[norm] < ZERO_GUARD:
            relative[norm] = absolute[norm]
            guarded.append(norm)
        else:
            relative[norm] = absolute[norm] / reference[norm]

    if guarded:
        LOGGER.warning(f'exact {field} has a vanishing {", ".join(guarded)} norm, relative errors are absolute')

    return FieldErrors(field, len(error), absolute, relative, tuple(guarded))


def error_norms(numeric: SolutionField, spec: ProblemSpec, cloud: NodeSet, stencils: StencilSet) -> ErrorReport:
    """Return the errors of the fluid velocity, the Darcy velocity, the pressure and the head.

    Each field is measured on the nodes of its own side. Numerical gradients are obtained with the stencils from the
    numerical nodal values; the gradient of the Darcy velocity involves the second derivatives of the head.
    """
    positions = cloud.positions
    fluid = cloud.indices(Side.FLUID)
    porous = cloud.indices(Side.POROUS)

    def values(field, nodes):
        return numpy.nan_to_num(numeric[field])[nodes]

    def derivatives(field, nodes, labels):
        nodal = numpy.nan_to_num(numeric[field])
        return numpy.column_stack([stencils.apply(label, nodal, nodes) for label in labels])

    def exact_derivatives(field, nodes, partials):
        return numpy.column_stack([spec.exact(field, positions[nodes], partial) for partial in partials])

    first = ('x', 'y')
    first_partials = ((1, 0), (0, 1))
    second = ('xx', 'xy', 'xy', 'yy')
    second_partials = ((2, 0), (1, 1), (1, 1), (0, 2))
    kappa = spec.kappa

    fields = {
        'u_f':
        norms_of(
            'u_f',
            numpy.column_stack([values(Field.U1, fluid), values(Field.U2, fluid)]),
            numpy.column_stack([spec.exact(Field.U1, positions[fluid]),
                                spec.exact(Field.U2, positions[fluid])]),
            numpy.hstack([derivatives(Field.U1, fluid, first),
                          derivatives(Field.U2, fluid, first)]),
            numpy.hstack([
                exact_derivatives(Field.U1, fluid, first_partials),
                exact_derivatives(Field.U2, fluid, first_partials)
            ]),
        ),
        'u_p':
        norms_of(
            'u_p',
            numeric.darcy_velocity[porous],
            spec.darcy_velocity(positions[porous]),
            -kappa * derivatives(Field.PHI, porous, second),
            -kappa * exact_derivatives(Field.PHI, porous, second_partials),
        ),
        'p':
        norms_of(
            'p',
            values(Field.P, fluid),
            spec.exact(Field.P, positions[fluid]),
            derivatives(Field.P, fluid, first),
            exact_derivatives(Field.P, fluid, first_partials),
        ),
        'phi':
        norms_of(
            'phi',
            values(Field.PHI, porous),
            spec.exact(Field.PHI, positions[porous]),
            derivatives(Field.PHI, porous, first),
            exact_derivatives(Field.PHI, porous, first_partials),
        ),
    }

    return ErrorReport(fields=fields, node_count=len(cloud), residual=numeric.residual)


def _validate(errors: Sequence[float], nx_values: Sequence[int]) -> Tuple[numpy.ndarray, numpy.ndarray]:
    errors = numpy.asarray(errors, dtype=float)
    nx_values = numpy.asarray(nx_values, dtype=float)

    if len(errors) != len(nx_values):
        raise ValueError(f'got {len(errors)} errors for {len(nx_values)} values of nx')

    if len(errors) < 2:
        raise ValueError('a convergence order needs at least two entries')

    if numpy.any(numpy.diff(nx_values) <= 0):
        raise ValueError(f'nx values must be strictly increasing, got {nx_values.tolist()}')

    if numpy.any(~(errors > 0)):
        raise NonPositiveError(f'errors must be strictly positive, got {errors.tolist()}')

    return errors, nx_values


def pairwise_orders(errors: Sequence[float], nx_values: Sequence[int]) -> List[float]:
    """Return the orders ``log(e_i / e_{i+1}) / log(nx_{i+1} / nx_i)`` of consecutive refinements."""
    errors, nx_values = _validate(errors, nx_values)
    return (numpy.log(errors[:-1] / errors[1:]) / numpy.log(nx_values[1:] / nx_values[:-1])).tolist()


def convergence_order(errors: Sequence[float], nx_values: Sequence[int]) -> float:
    """Return the least-squares slope of ``log(error)`` against ``log(1 / nx)``.

    :raises ValueError: for fewer than two entries or nx values that do not increase
    :raises NonPositiveError: if an error is not strictly positive
    """
    errors, nx_values = _validate(errors, nx_values)
    slope = numpy.polyfit(numpy.log(1. / nx_values), numpy.log(errors), 1)[0]
    LOGGER.debug(f'fitted order {slope:.3f}, pairwise orders {pairwise_orders(errors, nx_values)}')
    return float(slope)
