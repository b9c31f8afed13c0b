# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~stokes_darcy_gfdm.problems` package."""
import dataclasses

import numpy
import pytest
import sympy as sp

from stokes_darcy_gfdm.common.exceptions import ManufacturedInconsistencyError
from stokes_darcy_gfdm.common.types import Field
from stokes_darcy_gfdm.problems import (
    X,
    Y,
    ProblemSpec,
    check_manufactured_consistency,
    divergence_of_forcing,
    get_manufactured_solution,
)

BOUNDS = (-1., 1., -1., 2.)


@pytest.mark.parametrize('name', ('smooth_coupled', 'polynomial'))
@pytest.mark.parametrize('coefficients', ({}, {'nu': 0.1, 'kappa': 1E-2}, {'nu': 3., 'kappa': 5., 'beta_bjs': 0.}))
def test_consistency(name, coefficients):
    """Test that the registered forcings agree with the operators applied to the exact fields."""
    spec = get_manufactured_solution(name, **coefficients)

    check_manufactured_consistency(spec, BOUNDS)
    assert spec.coefficients()['nu'] == coefficients.get('nu', 1.)


@pytest.mark.parametrize('coefficients', ({}, {'nu': 0.1, 'kappa': 1E-2}))
def test_polynomial_forcings_vanish(random_points, coefficients):
    """Test that the cubic solution has vanishing forcings for any viscosity and conductivity."""
    spec = get_manufactured_solution('polynomial', **coefficients)
    points = random_points(bounds=BOUNDS)

    for name in ('f1', 'f2', 'fp'):
        numpy.testing.assert_allclose(spec.evaluate_forcing(name, points), 0., atol=1E-12)


def test_exact_fields(smooth_problem, random_points):
    """Test the evaluation of the exact fields and their partials against the expressions."""
    points = random_points()
    x, y = points.T

    numpy.testing.assert_allclose(smooth_problem.exact(Field.U1, points), x**2 * (y - 1)**2 + y)
    numpy.testing.assert_allclose(smooth_problem.exact('u1', points, (1, 1)), 4 * x * (y - 1))
    numpy.testing.assert_allclose(smooth_problem.gradient(Field.U2, points)[:, 1], -2 * x * (y - 1)**2)
    numpy.testing.assert_allclose(smooth_problem.velocity_divergence(points), 0., atol=1E-12)
    numpy.testing.assert_allclose(smooth_problem.darcy_velocity(points), -smooth_problem.gradient(Field.PHI, points))

    with pytest.raises(KeyError):
        smooth_problem.exact(Field.P, points, (3, 0))


def test_constant_fields_broadcast(random_points):
    """Test that constant expressions evaluate to arrays of the shape of the input."""
    spec = ProblemSpec.from_expressions({'u1': 0, 'u2': 0, 'p': 1, 'phi': X}, nu=1., kappa=1., g=1., beta_bjs=1.)
    points = random_points(count=7)

    numpy.testing.assert_array_equal(spec.exact(Field.P, points), numpy.ones(7))
    numpy.testing.assert_array_equal(spec.exact(Field.PHI, points, (1, 0)), numpy.ones(7))
    numpy.testing.assert_array_equal(spec.evaluate_forcing('f1', points), numpy.zeros(7))


def test_missing_fields():
    """Test that all four exact fields are required."""
    with pytest.raises(ValueError, match='phi'):
        ProblemSpec.from_expressions({'u1': Y, 'u2': X, 'p': 0}, nu=1., kappa=1., g=1., beta_bjs=1.)


def test_divergence_of_forcing(smooth_problem, random_points):
    """Test the finite difference fallback against the analytic divergence of the forcing."""
    points = random_points(bounds=(0., 1., 0., 2.))
    fallback = dataclasses.replace(smooth_problem, forcing_divergence=None)

    numpy.testing.assert_allclose(
        divergence_of_forcing(fallback, points), divergence_of_forcing(smooth_problem, points), atol=1E-7
    )


def test_inconsistent_forcing(smooth_problem):
    """Test that a forcing that disagrees with the exact fields is reported."""
    forcing = dict(smooth_problem.forcing, fp=lambda x, y: numpy.zeros_like(x))
    spec = dataclasses.replace(smooth_problem, forcing=forcing)

    with pytest.raises(ManufacturedInconsistencyError, match='forcing fp'):
        check_manufactured_consistency(spec, BOUNDS)


def test_divergent_velocity():
    """Test that an exact velocity that is not divergence free is reported."""
    spec = ProblemSpec.from_expressions({'u1': X, 'u2': X, 'p': 0, 'phi': sp.sin(X)},
                                        nu=1.,
                                        kappa=1.,
                                        g=1.,
                                        beta_bjs=1.)

    with pytest.raises(ManufacturedInconsistencyError, match='divergence'):
        check_manufactured_consistency(spec, BOUNDS)


def test_unknown_solution():
    """Test that unknown solution names are rejected."""
    with pytest.raises(ValueError, match='unknown manufactured solution'):
        get_manufactured_solution('parabolic')
