# -*- coding: utf-8 -*-
"""Direct solution of the coupled system and recovery of the nodal fields."""
import dataclasses
import logging
from typing import Dict
import warnings

import numpy
from scipy import linalg, sparse
from scipy.sparse.linalg import splu

from .assembly.coupled import CoupledSystem
from .common.exceptions import SingularSystemError
from .common.types import Field, Side
from .pointcloud.cloud import NodeSet

__all__ = ('SolutionField', 'solve', 'solve_linear', 'residual')

LOGGER = logging.getLogger(__name__)

#: Systems with fewer unknowns are factorized as dense matrices.
DENSE_THRESHOLD = 2000

#: Relative residual above which a warning is logged.
RESIDUAL_TOLERANCE = 1E-9


@dataclasses.dataclass(frozen=True)
class SolutionField:
    """Nodal values of the numerical solution.

    Every array has one entry per node of the cloud and holds NaN on nodes of the side where the field does not live.
    ``darcy_velocity`` is ``-K grad phi`` evaluated with the stencils of the porous nodes.
    """

    cloud: NodeSet
    values: Dict[Field, numpy.ndarray]
    darcy_velocity: numpy.ndarray
    vector: numpy.ndarray
    residual: float
    relative_residual: float

    def __getitem__(self, field: Field) -> numpy.ndarray:
        return self.values[Field(field)]


def solve_linear(matrix, rhs: numpy.ndarray, dense_threshold: int = DENSE_THRESHOLD) -> numpy.ndarray:
    """Solve a square linear system with an LU factorization with partial pivoting.

    :raises SingularSystemError: if the factorization breaks down
    """
    rhs = numpy.asarray(rhs, dtype=float)
    size = matrix.shape[0]

    if matrix.shape != (size, size) or rhs.shape[0] != size:
        raise ValueError(f'incompatible system of shape {matrix.shape} and right-hand side {rhs.shape}')

    if size < dense_threshold:
        dense = matrix.toarray() if sparse.issparse(matrix) else numpy.asarray(matrix, dtype=float)
        with warnings.catch_warnings():
            warnings.simplefilter('error', linalg.LinAlgWarning)
            try:
                solution = linalg.lu_solve(linalg.lu_factor(dense, check_finite=True), rhs)
            except (linalg.LinAlgWarning, linalg.LinAlgError, ValueError) as exception:
                raise SingularSystemError(f'dense LU factorization failed: {exception}') from exception
    else:
        try:
            solution = splu(sparse.csc_matrix(matrix)).solve(rhs)
        except RuntimeError as exception:
            raise SingularSystemError(f'sparse LU factorization failed: {exception}') from exception

    if not numpy.all(numpy.isfinite(solution)):
        raise SingularSystemError('the solution of the linear system is not finite')

    return solution


def residual(system, vector: numpy.ndarray) -> float:
    """Return the maximum norm of ``matrix vector - rhs`` of a system."""
    vector = numpy.asarray(vector, dtype=float)
    if vector.shape != (system.matrix.shape[1],):
        raise ValueError(f'expected a vector of length {system.matrix.shape[1]}, got shape {vector.shape}')
    if vector.size == 0:
        return 0.
    return float(numpy.max(numpy.abs(system.matrix @ vector - system.rhs)))


def solve(system: CoupledSystem, dense_threshold: int = DENSE_THRESHOLD) -> SolutionField:
    """Solve the coupled system and unpack the nodal fields.

    :raises SingularSystemError: if the factorization breaks down
    """
    vector = solve_linear(system.matrix, system.rhs, dense_threshold)
    absolute = residual(system, vector)
    relative = absolute / (numpy.max(numpy.abs(system.rhs), initial=0.) + 1.)

    if relative > RESIDUAL_TOLERANCE:
        LOGGER.warning(f'relative residual {relative:.3e} of the coupled solve exceeds {RESIDUAL_TOLERANCE:.0e}')
    else:
        LOGGER.debug(f'coupled solve of {system.size} unknowns, relative residual {relative:.3e}')

    values = system.unknowns.unpack(vector)
    cloud = system.cloud
    porous = cloud.indices(Side.POROUS)
    kappa = system.conductivity
    darcy = numpy.full((len(cloud), 2), numpy.nan)

    if len(porous):
        phi = numpy.nan_to_num(values[Field.PHI])
        darcy[porous, 0] = -kappa * system.stencils.apply('x', phi, porous)
        darcy[porous, 1] = -kappa * system.stencils.apply('y', phi, porous)

    return SolutionField(
        cloud=cloud,
        values=values,
        darcy_velocity=darcy,
        vector=vector,
        residual=absolute,
        relative_residual=relative,
    )
