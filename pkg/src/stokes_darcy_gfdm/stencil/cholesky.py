# -*- coding: utf-8 -*-
"""Cholesky factorization of the small symmetric positive definite normal-equation matrices."""
import numpy
from scipy.linalg import solve_triangular

from ..common.exceptions import NotPositiveDefiniteError

__all__ = ('cholesky_factor', 'cholesky_solve_spd')

#: Pivots below this fraction of the largest diagonal entry are treated as a breakdown.
PIVOT_THRESHOLD = 1E-12

#: Largest relative asymmetry accepted for the input matrix.
SYMMETRY_TOLERANCE = 1E-12


def cholesky_factor(matrix: numpy.ndarray, threshold: float = PIVOT_THRESHOLD) -> numpy.ndarray:
    """Return the lower triangular factor ``L`` with ``L L^T = matrix``.

    The factor is computed column by column: the pivot ``L[j, j]`` is the square root of the diagonal entry minus the
    squared entries already computed in row ``j``, and the rest of the column follows from one matrix-vector product.

    :param matrix: symmetric positive definite matrix
    :param threshold: pivots at or below ``threshold`` times the largest diagonal entry raise
    :raises NotPositiveDefiniteError: on a pivot under the threshold
    """
    matrix = numpy.asarray(matrix, dtype=float)
    size = matrix.shape[0]
    factor = numpy.zeros_like(matrix)
    limit = threshold * numpy.max(numpy.abs(numpy.diag(matrix)), initial=0.)

    for j in range(size):
        row = factor[j, :j]
        pivot = matrix[j, j] - row @ row

        if not pivot > limit:
            raise NotPositiveDefiniteError(f'pivot {pivot:.3e} of column {j} is below the threshold {limit:.3e}')

        factor[j, j] = numpy.sqrt(pivot)
        factor[j + 1:, j] = (matrix[j + 1:, j] - factor[j + 1:, :j] @ row) / factor[j, j]

    return factor


def cholesky_solve_spd(matrix: numpy.ndarray, rhs: numpy.ndarray, threshold: float = PIVOT_THRESHOLD) -> numpy.ndarray:
    """Solve ``matrix x = rhs`` for a symmetric positive definite matrix through its Cholesky factor.

    ``rhs`` may be a vector or a matrix of right-hand sides.

    :raises ValueError: if the matrix is not square or not symmetric
    :raises NotPositiveDefiniteError: on a pivot under the threshold
    """
    matrix = numpy.asarray(matrix, dtype=float)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f'expected a square matrix, got shape {matrix.shape}')

    scale = numpy.max(numpy.abs(matrix), initial=0.)
    if numpy.max(numpy.abs(matrix - matrix.T), initial=0.) > SYMMETRY_TOLERANCE * scale:
        raise ValueError('the matrix is not symmetric')

    factor = cholesky_factor(matrix, threshold)
    forward = solve_triangular(factor, rhs, lower=True, check_finite=False)
    return solve_triangular(factor.T, forward, lower=False, check_finite=False)
