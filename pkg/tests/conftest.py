# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name
"""Fixtures shared by the whole test suite."""
import numpy
import pytest


@pytest.fixture
def generate_linear_cloud():
    """Return a factory for node sets of two rectangles that share the line segment ``(0, 1) - (1, 1)``.

    By default the fluid occupies ``[0, 1] x [1, 2]`` and the porous medium ``[0, 1] x [0, 1]``.
    """

    def _generate_linear_cloud(nx=8, n_gamma=None, jitter=0., seed=0, fluid=(0., 1., 1., 2.), porous=(0., 1., 0., 1.)):
        from stokes_darcy_gfdm.pointcloud import LineSegment, Rectangle, generate_cloud

        return generate_cloud(
            Rectangle.from_bounds(fluid),
            Rectangle.from_bounds(porous),
            LineSegment(start=(0., 1.), end=(1., 1.)),
            nx,
            n_gamma,
            jitter=jitter,
            seed=seed,
        )

    return _generate_linear_cloud


@pytest.fixture
def generate_closed_cloud():
    """Return a factory for node sets of a closed interface inside the square ``[-1, 1] x [-1, 1]``."""

    def _generate_closed_cloud(nx=16, curve=None, n_gamma=None, jitter=0., seed=0):
        from stokes_darcy_gfdm.pointcloud import Circle, Rectangle, generate_cloud

        return generate_cloud(
            Rectangle(-1., 1., -1., 1.),
            None,
            curve if curve is not None else Circle(),
            nx,
            n_gamma,
            jitter=jitter,
            seed=seed,
        )

    return _generate_closed_cloud


@pytest.fixture(scope='session')
def smooth_problem():
    """Return the trigonometric manufactured problem with unit coefficients."""
    from stokes_darcy_gfdm.problems import smooth_coupled_solution
    return smooth_coupled_solution()


@pytest.fixture(scope='session')
def polynomial_problem():
    """Return the cubic manufactured problem with unit coefficients."""
    from stokes_darcy_gfdm.problems import polynomial_solution
    return polynomial_solution()


@pytest.fixture
def random_points():
    """Return a factory of reproducible random points in a rectangle."""

    def _random_points(count=50, bounds=(0., 1., 0., 2.), seed=0):
        rng = numpy.random.default_rng(seed)
        x_min, x_max, y_min, y_max = bounds
        return numpy.column_stack([rng.uniform(x_min, x_max, count), rng.uniform(y_min, y_max, count)])

    return _random_points
