# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~stokes_darcy_gfdm.pointcloud.cloud` module."""
import csv

import numpy
import pytest

from stokes_darcy_gfdm.common.exceptions import RegionOverlapError
from stokes_darcy_gfdm.common.types import NodeKind, Side
from stokes_darcy_gfdm.pointcloud import Circle, Heart, LineSegment, Rectangle, generate_cloud, write_cloud_csv
from stokes_darcy_gfdm.pointcloud.cloud import NODE_CLASSES


def test_linear_counts(generate_linear_cloud):
    """Test the node counts of two unit squares with eight intervals across."""
    cloud = generate_linear_cloud(nx=8)

    assert cloud.counts() == {
        'fluid_boundary': 25,
        'fluid_interface': 7,
        'fluid_interior': 49,
        'porous_boundary': 23,
        'porous_interface': 7,
        'porous_interior': 49,
    }
    assert len(cloud) == 160
    assert cloud.spacing == pytest.approx(0.125)


def test_node_ordering(generate_linear_cloud):
    """Test that the nodes are laid out class by class."""
    cloud = generate_linear_cloud(nx=8)
    classes = list(zip(cloud.sides, cloud.kinds))
    expected = [(side.value, kind.value) for side, kind in NODE_CLASSES for _ in range(cloud.count(side, kind))]

    assert classes == expected


def test_linear_interface(generate_linear_cloud):
    """Test the positions, normals and partners of the interface nodes of a line segment."""
    cloud = generate_linear_cloud(nx=8)
    fluid = cloud.indices(Side.FLUID, NodeKind.INTERFACE)
    porous = cloud.indices(Side.POROUS, NodeKind.INTERFACE)

    numpy.testing.assert_allclose(cloud.positions[fluid], numpy.column_stack([numpy.arange(1, 8) / 8, numpy.ones(7)]))
    numpy.testing.assert_array_equal(cloud.positions[fluid], cloud.positions[porous])
    numpy.testing.assert_array_equal(cloud.partners[fluid], porous)
    numpy.testing.assert_array_equal(cloud.partners[porous], fluid)
    numpy.testing.assert_allclose(cloud.normals[fluid], [[0., -1.]] * 7)
    numpy.testing.assert_allclose(cloud.normals[porous], [[0., 1.]] * 7)
    numpy.testing.assert_allclose(cloud.tangents[fluid], [[1., 0.]] * 7)

    interior = cloud.indices(kind=NodeKind.INTERIOR)
    assert numpy.all(numpy.isnan(cloud.normals[interior]))
    assert numpy.all(cloud.partners[interior] == -1)


def test_linear_corners_are_fluid(generate_linear_cloud):
    """Test that the end points of the segment are fluid boundary nodes and the porous side has no node on the line."""
    cloud = generate_linear_cloud(nx=8)
    on_line = numpy.isclose(cloud.positions[:, 1], 1.)

    corners = numpy.flatnonzero(on_line & numpy.isin(cloud.positions[:, 0], [0., 1.]))
    assert set(cloud.sides[corners]) == {Side.FLUID.value}
    assert set(cloud.kinds[corners]) == {NodeKind.BOUNDARY.value}

    porous = on_line & (cloud.sides == Side.POROUS.value)
    assert set(cloud.kinds[porous]) == {NodeKind.INTERFACE.value}


def test_thin_fluid_layer():
    """Test the geometry of a thin fluid layer on top of the porous medium."""
    cloud = generate_cloud(
        Rectangle(0., 1., 1., 1.25), Rectangle(0., 1., 0.25, 1.), LineSegment((0., 1.), (1., 1.)), nx=16
    )

    assert cloud.count(Side.FLUID, NodeKind.INTERFACE) == 15
    assert cloud.count(Side.FLUID, NodeKind.INTERIOR) == 15 * 3
    assert cloud.domain == Rectangle(0., 1., 0.25, 1.25)


def test_closed_cloud(generate_closed_cloud):
    """Test the classification of the nodes around a circle."""
    cloud = generate_closed_cloud(nx=16)
    circle = cloud.interface
    spacing = cloud.spacing

    assert cloud.count(Side.POROUS, NodeKind.BOUNDARY) == 0
    assert cloud.count(Side.FLUID, NodeKind.BOUNDARY) == 64
    assert cloud.count(Side.FLUID, NodeKind.INTERFACE) == 26

    porous = cloud.positions[cloud.indices(Side.POROUS, NodeKind.INTERIOR)]
    fluid = cloud.positions[cloud.indices(Side.FLUID, NodeKind.INTERIOR)]
    assert numpy.all(circle.contains(porous))
    assert not numpy.any(circle.contains(fluid))

    distance = numpy.abs(numpy.linalg.norm(numpy.vstack([porous, fluid]), axis=1) - 0.5)
    assert numpy.all(distance >= 0.39 * spacing)

    interface = cloud.indices(Side.FLUID, NodeKind.INTERFACE)
    radial = cloud.positions[interface] / numpy.linalg.norm(cloud.positions[interface], axis=1)[:, None]
    numpy.testing.assert_allclose(cloud.normals[interface], -radial, atol=1E-12)


def test_closed_n_gamma(generate_closed_cloud):
    """Test an explicit number of interface pairs and its lower bound."""
    assert generate_closed_cloud(nx=16, n_gamma=40).count(Side.POROUS, NodeKind.INTERFACE) == 40

    with pytest.raises(ValueError):
        generate_closed_cloud(nx=16, n_gamma=4)


def test_heart_cloud(generate_closed_cloud):
    """Test that the heart with its cusp yields a valid cloud."""
    cloud = generate_closed_cloud(nx=32, curve=Heart())

    assert cloud.count(Side.POROUS, NodeKind.INTERIOR) > 0
    assert numpy.all(numpy.isfinite(cloud.normals[cloud.indices(kind=NodeKind.INTERFACE)]))


def test_jitter(generate_linear_cloud):
    """Test that the jitter is reproducible and leaves boundary and interface nodes in place."""
    reference = generate_linear_cloud(nx=8)
    first = generate_linear_cloud(nx=8, jitter=0.3, seed=1)
    second = generate_linear_cloud(nx=8, jitter=0.3, seed=1)

    numpy.testing.assert_array_equal(first.positions, second.positions)

    for kind in (NodeKind.BOUNDARY, NodeKind.INTERFACE):
        numpy.testing.assert_array_equal(first.positions[first.indices(kind=kind)],
                                         reference.positions[reference.indices(kind=kind)])

    interior = first.indices(Side.FLUID, NodeKind.INTERIOR)
    assert not numpy.allclose(first.positions[interior], reference.positions[reference.indices(Side.FLUID,
                                                                                                 NodeKind.INTERIOR)])


@pytest.mark.parametrize('kwargs', ({'nx': 3}, {'nx': 8, 'jitter': 0.5}, {'nx': 8, 'n_gamma': 0}))
def test_invalid_arguments(generate_linear_cloud, kwargs):
    """Test that invalid arguments raise ``ValueError``."""
    with pytest.raises(ValueError):
        generate_linear_cloud(**kwargs)


def test_region_errors():
    """Test the errors for interfaces that are incompatible with the regions."""
    lower, upper = Rectangle(0., 1., 0., 1.), Rectangle(0., 1., 1., 2.)

    with pytest.raises(RegionOverlapError):
        generate_cloud(upper, lower, LineSegment((0., 0.5), (1., 0.5)), nx=8)

    with pytest.raises(RegionOverlapError):
        generate_cloud(upper, Rectangle(0., 1., 0., 1.5), LineSegment((0., 1.), (1., 1.)), nx=8)

    with pytest.raises(RegionOverlapError):
        generate_cloud(Rectangle(-1., 1., -1., 1.), None, Circle(circle_radius=1.), nx=8)

    with pytest.raises(RegionOverlapError):
        generate_cloud(Rectangle(-1., 1., -1., 1.), lower, Circle(), nx=8)

    with pytest.raises(RegionOverlapError):
        generate_cloud(upper, None, LineSegment((0., 1.), (1., 1.)), nx=8)


def test_node(generate_linear_cloud):
    """Test the single node view."""
    cloud = generate_linear_cloud(nx=8)
    fluid = cloud.indices(Side.FLUID, NodeKind.INTERFACE)[0]
    node = cloud.node(fluid)

    assert node.side is Side.FLUID
    assert node.kind is NodeKind.INTERFACE
    assert node.partner == cloud.partners[fluid]
    assert cloud.node(0).normal is None


def test_read_only(generate_linear_cloud):
    """Test that the per-node arrays cannot be modified."""
    cloud = generate_linear_cloud(nx=8)

    with pytest.raises(ValueError):
        cloud.positions[0, 0] = 10.


def test_side_tree(generate_linear_cloud):
    """Test that the tree of a side holds exactly the nodes of that side."""
    cloud = generate_linear_cloud(nx=8)
    tree, indices = cloud.side_tree(Side.POROUS)

    assert tree.n == cloud.count(Side.POROUS)
    numpy.testing.assert_array_equal(indices, cloud.indices(Side.POROUS))


def test_boundary_normals(generate_linear_cloud):
    """Test the outward normals of the porous boundary nodes."""
    cloud = generate_linear_cloud(nx=8)
    normals = cloud.boundary_normals()
    nodes = cloud.indices(Side.POROUS, NodeKind.BOUNDARY)
    bottom = nodes[numpy.isclose(cloud.positions[nodes, 1], 0.) & ~numpy.isin(cloud.positions[nodes, 0], [0., 1.])]

    numpy.testing.assert_array_equal(normals[bottom], [[0., -1.]] * len(bottom))
    assert numpy.all(numpy.isnan(normals[cloud.indices(Side.FLUID)]))


def test_write_cloud_csv(generate_linear_cloud, tmp_path):
    """Test the CSV dump of the nodes."""
    cloud = generate_linear_cloud(nx=8)
    filepath = write_cloud_csv(cloud, tmp_path / 'cloud.csv')

    with filepath.open() as handle:
        rows = list(csv.reader(handle))

    assert rows[0] == ['index', 'x', 'y', 'side', 'kind', 'nx', 'ny', 'tx', 'ty']
    assert len(rows) == len(cloud) + 1
    assert rows[1][3:5] == ['fluid', 'boundary']
    assert rows[1][5:] == ['', '', '', '']

    interface = cloud.indices(Side.FLUID, NodeKind.INTERFACE)[0]
    assert float(rows[interface + 1][6]) == -1.
