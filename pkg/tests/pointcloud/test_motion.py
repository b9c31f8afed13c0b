# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~stokes_darcy_gfdm.pointcloud.motion` module."""
import numpy
import pytest

from stokes_darcy_gfdm.common.exceptions import CurveEscapedDomainError
from stokes_darcy_gfdm.pointcloud import Circle, LinearPath, MotionSpec, Rectangle, interface_at_time


def test_time_grid():
    """Test the uniform time grid including both end points."""
    motion = MotionSpec(path=LinearPath((0., 0.), (0.2, 0.), 1.), t_final=1., n_steps=4)

    assert motion.dt == pytest.approx(0.25)
    numpy.testing.assert_allclose(motion.times(), [0., 0.25, 0.5, 0.75, 1.])

    for j in (0, 6):
        with pytest.raises(ValueError):
            motion.time(j)


@pytest.mark.parametrize('kwargs', ({'n_steps': 0, 't_final': 1.}, {'n_steps': 2, 't_final': 0.}))
def test_invalid_motion(kwargs):
    """Test that an empty time grid is rejected."""
    with pytest.raises(ValueError):
        MotionSpec(path=LinearPath((0., 0.), (1., 0.), 1.), **kwargs)


def test_interface_at_time():
    """Test that the curve is translated along the path."""
    circle = Circle(center=(-0.2, 0.), circle_radius=0.3)
    motion = MotionSpec(path=LinearPath((-0.2, 0.), (0.2, 0.), 1.), t_final=1., n_steps=2)

    assert interface_at_time(circle, motion, 1) == circle
    assert interface_at_time(circle, motion, 2).center == pytest.approx((0., 0.))
    assert interface_at_time(circle, motion, 3).center == pytest.approx((0.2, 0.))


def test_interface_escapes():
    """Test that a curve moved out of the global rectangle raises."""
    circle = Circle(center=(0., 0.), circle_radius=0.3)
    motion = MotionSpec(
        path=LinearPath((0., 0.), (1., 0.), 1.), t_final=1., n_steps=2, domain=Rectangle(-1., 1., -1., 1.)
    )

    assert interface_at_time(circle, motion, 2).center == pytest.approx((0.5, 0.))

    with pytest.raises(CurveEscapedDomainError):
        interface_at_time(circle, motion, 3)
