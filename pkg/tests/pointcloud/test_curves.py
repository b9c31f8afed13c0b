# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~stokes_darcy_gfdm.pointcloud.curves` module."""
import math

import numpy
import pytest

from stokes_darcy_gfdm.common.exceptions import DegenerateCurveError
from stokes_darcy_gfdm.common.types import CurveKind
from stokes_darcy_gfdm.pointcloud import LinearPath, MotionSpec, interface_at_time
from stokes_darcy_gfdm.pointcloud.curves import (
    Circle,
    Ellipse,
    Flower,
    Heart,
    LineSegment,
    Pentagon,
    Rectangle,
    TwoPetaled,
    build_curve,
)

CLOSED_CURVES = (Circle(), TwoPetaled(), Flower(), Heart(), Ellipse(), Pentagon())


def test_rectangle_invalid():
    """Test that empty rectangles are rejected."""
    with pytest.raises(ValueError):
        Rectangle(1., 0., 0., 1.)

    with pytest.raises(ValueError):
        Rectangle.from_bounds([0., 1., 1., 1.])


def test_rectangle_grid():
    """Test the tensor-product grid and the boundary mask of a rectangle."""
    rectangle = Rectangle(0., 1., 0., 0.5)
    grid = rectangle.grid(0.25)

    assert grid.shape == (15, 2)
    assert numpy.count_nonzero(rectangle.on_boundary(grid)) == 12
    assert numpy.count_nonzero(rectangle.contains(grid)) == 3
    assert grid[:, 0].max() == 1. and grid[:, 1].max() == 0.5


def test_rectangle_outward_normals():
    """Test that edge points get the outward normal and corners NaN."""
    rectangle = Rectangle(0., 1., 0., 1.)
    points = numpy.array([[0., 0.5], [1., 0.5], [0.5, 0.], [0.5, 1.], [0., 0.]])
    normals = rectangle.outward_normals(points)

    numpy.testing.assert_array_equal(normals[:4], [[-1., 0.], [1., 0.], [0., -1.], [0., 1.]])
    assert numpy.all(numpy.isnan(normals[4]))


def test_rectangle_bounding_and_overlap():
    """Test the bounding rectangle and the overlap area of two rectangles."""
    lower, upper = Rectangle(0., 1., 0., 1.), Rectangle(0., 1., 1., 2.)

    assert lower.bounding(upper) == Rectangle(0., 1., 0., 2.)
    assert lower.overlap_area(upper) == 0.
    assert lower.overlap_area(Rectangle(0.5, 2., 0.5, 2.)) == pytest.approx(0.25)


def test_line_segment():
    """Test the sampling, tangent and distance of a line segment."""
    segment = LineSegment(start=(0., 1.), end=(2., 1.))

    numpy.testing.assert_allclose(segment.sample_parameters(3), [0.25, 0.5, 0.75])
    numpy.testing.assert_allclose(segment.position([0.5]), [[1., 1.]])
    numpy.testing.assert_allclose(segment.tangent([0.1, 0.9]), [[1., 0.], [1., 0.]])
    numpy.testing.assert_allclose(segment.left_normal([0.1]), [[0., 1.]])
    numpy.testing.assert_allclose(segment.distance(numpy.array([[1., 3.], [-3., 5.]])), [2., 5.])
    assert segment.length() == pytest.approx(2.)


@pytest.mark.parametrize('curve', CLOSED_CURVES, ids=lambda curve: curve.kind.value)
def test_closed_curve_geometry(curve):
    """Test that tangents are unit vectors and that the left normal points into the curve.

    Samples close to the center, i.e. near the cusp of the heart, are skipped.
    """
    theta = curve.sample_parameters(32)
    theta = theta[curve.radius(theta) > 0.1]
    positions = curve.position(theta)
    tangents = curve.tangent(theta)
    normals = curve.left_normal(theta)

    numpy.testing.assert_allclose(numpy.linalg.norm(tangents, axis=1), 1.)
    numpy.testing.assert_allclose(numpy.einsum('ij,ij->i', tangents, normals), 0., atol=1E-14)
    assert numpy.all(curve.contains(positions + 1E-3 * normals))
    assert not numpy.any(curve.contains(positions - 1E-3 * normals))


@pytest.mark.parametrize('curve', CLOSED_CURVES, ids=lambda curve: curve.kind.value)
def test_closed_curve_derivative(curve):
    """Test the derivative of the position against central differences."""
    theta = numpy.linspace(0.1, 6., 17)
    step = 1E-6
    difference = (curve.position(theta + step) - curve.position(theta - step)) / (2 * step)

    numpy.testing.assert_allclose(curve.derivative(theta), difference, atol=1E-8)


def test_heart_cusp_shift():
    """Test that samples hitting the cusp of the heart are shifted by half a step."""
    heart = Heart()
    theta = heart.sample_parameters(8)

    assert theta[0] == pytest.approx(math.pi / 8)
    numpy.testing.assert_allclose(numpy.diff(theta), 2 * math.pi / 8)

    with pytest.raises(DegenerateCurveError):
        heart.tangent([math.pi / 2])


def test_closed_curve_degenerate():
    """Test that a curve degenerate at every sample raises."""
    with pytest.raises(DegenerateCurveError):
        Circle(circle_radius=0.).sample_parameters(8)


def test_ellipse_and_pentagon_radius():
    """Test the radius of the ellipse on its axes and of the pentagon at a vertex and an edge midpoint."""
    ellipse = Ellipse(a=0.25, b=0.15)
    numpy.testing.assert_allclose(ellipse.radius(numpy.array([0., math.pi / 2])), [0.25, 0.15])

    pentagon = Pentagon(circumradius=0.25)
    vertex, midpoint = pentagon.rotation, pentagon.rotation + math.pi / 5
    numpy.testing.assert_allclose(
        pentagon.radius(numpy.array([vertex, midpoint])), [0.25, 0.25 * math.cos(math.pi / 5)]
    )


def test_translated():
    """Test that translation moves the center and keeps the shape."""
    circle = Circle(center=(0.1, 0.2), circle_radius=0.3)
    moved = circle.translated((0.5, -0.5))

    assert moved.center == pytest.approx((0.6, -0.3))
    assert moved.circle_radius == 0.3
    numpy.testing.assert_allclose(moved.position([0.]), [[0.9, -0.3]])


def test_build_curve():
    """Test the construction of curves from keyword parameters."""
    heart = build_curve('heart', center=[0., 0.1], scale=0.2)

    assert isinstance(heart, Heart)
    assert heart.center == (0., 0.1)
    assert build_curve(CurveKind.CIRCLE).parameters() == {'kind': 'circle', 'center': (0., 0.), 'circle_radius': 0.5}

    with pytest.raises(ValueError, match='unknown parameters'):
        build_curve('circle', radius=0.3)

    with pytest.raises(ValueError):
        build_curve('square')


@pytest.mark.parametrize('count', (32, 64))
@pytest.mark.parametrize('curve', CLOSED_CURVES, ids=lambda curve: curve.kind.value)
def test_closed_curve_zero_flux(curve, count):
    """Test that the outward normals of the samples, weighted by the arc length element, sum to zero."""
    theta = curve.sample_parameters(count)
    speed = numpy.linalg.norm(curve.derivative(theta), axis=1)
    flux = numpy.sum(-curve.left_normal(theta) * speed[:, None], axis=0) * 2 * math.pi / count

    assert numpy.linalg.norm(flux) <= 1. / count**2


@pytest.mark.parametrize('curve', (Pentagon(center=(-0.2, 0.)), Ellipse(center=(-0.2, 0.))), ids=lambda c: c.kind.value)
def test_sampled_length_invariant_under_motion(curve):
    """Test that the polygon through the interface samples keeps its length on every time slice."""
    motion = MotionSpec(
        path=LinearPath((-0.2, 0.), (0.2, 0.), 1.), t_final=1., n_steps=10, domain=Rectangle(-1., 1., -1., 1.)
    )

    def chord_length(moved):
        points = moved.position(moved.sample_parameters(48))
        points = numpy.vstack([points, points[:1]])
        return numpy.sum(numpy.linalg.norm(numpy.diff(points, axis=0), axis=1))

    reference = chord_length(curve)
    for j in range(1, motion.n_steps + 2):
        assert chord_length(interface_at_time(curve, motion, j)) == pytest.approx(reference, rel=0., abs=1E-12)
