# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~stokes_darcy_gfdm.solver` module."""
import numpy
import pytest
from scipy import sparse

from stokes_darcy_gfdm.assembly import assemble
from stokes_darcy_gfdm.common.exceptions import SingularSystemError
from stokes_darcy_gfdm.common.types import Field, Side
from stokes_darcy_gfdm.solver import residual, solve, solve_linear
from stokes_darcy_gfdm.stencil import build_stencils


@pytest.mark.parametrize('dense_threshold', (0, 100))
def test_solve_linear(dense_threshold):
    """Test the sparse and the dense factorization on a small nonsymmetric system."""
    matrix = sparse.csr_matrix(numpy.array([[4., 1., 0.], [2., 5., 1.], [0., 3., 6.]]))
    expected = numpy.array([1., -2., 0.5])

    solution = solve_linear(matrix, matrix @ expected, dense_threshold=dense_threshold)
    numpy.testing.assert_allclose(solution, expected)


@pytest.mark.parametrize('dense_threshold', (0, 100))
def test_singular_system(dense_threshold):
    """Test that a singular matrix raises for both factorizations."""
    matrix = sparse.csr_matrix(numpy.array([[1., 2.], [2., 4.]]))

    with pytest.raises(SingularSystemError):
        solve_linear(matrix, numpy.ones(2), dense_threshold=dense_threshold)


def test_incompatible_system():
    """Test that a right-hand side of the wrong length is rejected."""
    with pytest.raises(ValueError):
        solve_linear(sparse.eye(3, format='csr'), numpy.ones(2))


@pytest.mark.parametrize('dense_threshold', (0, 10000))
def test_solve_cubic_problem(generate_linear_cloud, polynomial_problem, dense_threshold):
    """Test that the cubic problem is solved to rounding with fourth order stencils."""
    cloud = generate_linear_cloud(nx=8)
    stencils = build_stencils(cloud, 4, 40)
    system = assemble(cloud, stencils, polynomial_problem)
    solution = solve(system, dense_threshold=dense_threshold)

    fluid, porous = cloud.indices(Side.FLUID), cloud.indices(Side.POROUS)
    for field, nodes in ((Field.U1, fluid), (Field.U2, fluid), (Field.P, fluid), (Field.PHI, porous)):
        numpy.testing.assert_allclose(
            solution[field][nodes], polynomial_problem.exact(field, cloud.positions[nodes]), atol=1E-6
        )

    assert numpy.all(numpy.isnan(solution[Field.PHI][fluid]))
    assert numpy.all(numpy.isnan(solution.darcy_velocity[fluid]))
    numpy.testing.assert_allclose(
        solution.darcy_velocity[porous], polynomial_problem.darcy_velocity(cloud.positions[porous]), atol=1E-5
    )
    assert solution.relative_residual < 1E-9
    assert residual(system, solution.vector) == pytest.approx(solution.residual)


def test_residual_shape(generate_linear_cloud, polynomial_problem):
    """Test that the residual rejects vectors of the wrong length."""
    cloud = generate_linear_cloud(nx=8)
    system = assemble(cloud, build_stencils(cloud, 2, 12), polynomial_problem)

    with pytest.raises(ValueError):
        residual(system, numpy.zeros(3))
