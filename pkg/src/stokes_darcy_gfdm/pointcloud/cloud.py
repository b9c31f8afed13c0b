# -*- coding: utf-8 -*-
"""Generation and classification of the collocation nodes."""
import csv
import dataclasses
import functools
import logging
import math
import pathlib
from typing import Dict, Optional, Tuple, Union

import numpy
from scipy.spatial import cKDTree

from ..common.exceptions import RegionOverlapError, UnmatchedInterfaceNodeError
from ..common.types import NodeKind, Side
from ..utils.convert import format_value
from .curves import ClosedCurve, InterfaceCurve, LineSegment, Rectangle

__all__ = ('Node', 'NodeSet', 'generate_cloud', 'write_cloud_csv', 'NODE_CLASSES')

LOGGER = logging.getLogger(__name__)

#: Nodes closer than this fraction of the spacing to the interface are replaced by the interface samples.
REMOVAL_FRACTION = 0.4

#: Largest admissible jitter of interior nodes as a fraction of the spacing.
MAX_JITTER = 0.45

TOLERANCE_POSITION = 1E-12

#: Order in which the node classes are laid out in a ``NodeSet``.
NODE_CLASSES = (
    (Side.FLUID, NodeKind.BOUNDARY),
    (Side.FLUID, NodeKind.INTERFACE),
    (Side.FLUID, NodeKind.INTERIOR),
    (Side.POROUS, NodeKind.BOUNDARY),
    (Side.POROUS, NodeKind.INTERFACE),
    (Side.POROUS, NodeKind.INTERIOR),
)


@dataclasses.dataclass(frozen=True)
class Node:
    """A single collocation node."""

    index: int
    position: Tuple[float, float]
    side: Side
    kind: NodeKind
    normal: Optional[Tuple[float, float]] = None
    tangent: Optional[Tuple[float, float]] = None
    partner: Optional[int] = None


def _read_only(array: numpy.ndarray) -> numpy.ndarray:
    array = numpy.ascontiguousarray(array)
    array.setflags(write=False)
    return array


class NodeSet:
    """Immutable set of classified collocation nodes.

    Nodes are stored in the order given by ``NODE_CLASSES``: fluid boundary, fluid interface, fluid interior, then the
    same three classes on the porous side. Fluid interface node ``k`` and porous interface node ``k`` form a co-located
    pair. Per-node data is exposed as read-only arrays; ``normals``, ``tangents`` are NaN and ``partners`` is ``-1`` for
    nodes that are not on the interface.
    """

    def __init__(
        self,
        positions: numpy.ndarray,
        sides: numpy.ndarray,
        kinds: numpy.ndarray,
        normals: numpy.ndarray,
        tangents: numpy.ndarray,
        partners: numpy.ndarray,
        *,
        spacing: float,
        domain: Rectangle,
        interface: InterfaceCurve,
        porous_region: Optional[Rectangle] = None,
    ):
        self.positions = _read_only(numpy.asarray(positions, dtype=float))
        self.sides = _read_only(numpy.asarray(sides, dtype='<U6'))
        self.kinds = _read_only(numpy.asarray(kinds, dtype='<U9'))
        self.normals = _read_only(numpy.asarray(normals, dtype=float))
        self.tangents = _read_only(numpy.asarray(tangents, dtype=float))
        self.partners = _read_only(numpy.asarray(partners, dtype=int))
        self.spacing = float(spacing)
        self.domain = domain
        self.interface = interface
        self.porous_region = porous_region
        self._validate_interface_pairs()

    def __len__(self) -> int:
        return len(self.positions)

    def __repr__(self) -> str:
        counts = ', '.join(f'{side.value}_{kind.value}={self.count(side, kind)}' for side, kind in NODE_CLASSES)
        return f'<NodeSet {counts}>'

    def node(self, index: int) -> Node:
        """Return the node with the given index."""
        kind = NodeKind(self.kinds[index])
        is_interface = kind is NodeKind.INTERFACE
        return Node(
            index=int(index),
            position=tuple(self.positions[index]),
            side=Side(self.sides[index]),
            kind=kind,
            normal=tuple(self.normals[index]) if is_interface else None,
            tangent=tuple(self.tangents[index]) if is_interface else None,
            partner=int(self.partners[index]) if is_interface else None,
        )

    def mask(self, side: Optional[Side] = None, kind: Optional[NodeKind] = None) -> numpy.ndarray:
        """Return a boolean mask of the nodes of the given side and kind, either of which may be omitted."""
        mask = numpy.ones(len(self), dtype=bool)
        if side is not None:
            mask &= self.sides == side.value
        if kind is not None:
            mask &= self.kinds == kind.value
        return mask

    def indices(self, side: Optional[Side] = None, kind: Optional[NodeKind] = None) -> numpy.ndarray:
        """Return the indices of the nodes of the given side and kind in ascending order."""
        return numpy.flatnonzero(self.mask(side, kind))

    def count(self, side: Optional[Side] = None, kind: Optional[NodeKind] = None) -> int:
        return int(numpy.count_nonzero(self.mask(side, kind)))

    def counts(self) -> Dict[str, int]:
        """Return the number of nodes per class keyed on ``<side>_<kind>``."""
        return {f'{side.value}_{kind.value}': self.count(side, kind) for side, kind in NODE_CLASSES}

    @functools.lru_cache(maxsize=None)
    def side_tree(self, side: Side) -> Tuple[cKDTree, numpy.ndarray]:
        """Return a KD-tree over the nodes of one side together with the global indices of the tree points."""
        indices = self.indices(side)
        return cKDTree(self.positions[indices]), indices

    def boundary_normals(self) -> numpy.ndarray:
        """Return the outward normals of porous boundary nodes with respect to the porous rectangle.

        Rows of other nodes and of the rectangle corners are NaN.
        """
        normals = numpy.full_like(self.positions, numpy.nan)
        if self.porous_region is None:
            return normals
        indices = self.indices(Side.POROUS, NodeKind.BOUNDARY)
        normals[indices] = self.porous_region.outward_normals(self.positions[indices])
        return normals

    def _validate_interface_pairs(self):
        fluid = self.indices(Side.FLUID, NodeKind.INTERFACE)
        porous = self.indices(Side.POROUS, NodeKind.INTERFACE)

        if len(fluid) != len(porous):
            raise UnmatchedInterfaceNodeError(f'{len(fluid)} fluid and {len(porous)} porous interface nodes')

        if numpy.any(self.partners[fluid] != porous) or numpy.any(self.partners[porous] != fluid):
            raise UnmatchedInterfaceNodeError('interface partners are not mutual')

        if numpy.any(numpy.abs(self.positions[fluid] - self.positions[porous]) > 1E-14):
            raise UnmatchedInterfaceNodeError('interface partners are not co-located')


def _spacing(domain: Rectangle, nx: int) -> float:
    return domain.width / nx


def _interface_samples(curve: InterfaceCurve, n_gamma: int, fluid_center: Optional[numpy.ndarray]):
    """Return positions, fluid-side normals and tangents of the interface samples."""
    theta = curve.sample_parameters(n_gamma)
    positions = curve.position(theta)
    tangents = curve.tangent(theta)
    normals = curve.left_normal(theta)

    if fluid_center is not None:
        # The fluid normal points out of the fluid rectangle, away from its center.
        midpoint = curve.position([0.5])[0]
        if numpy.dot(normals[0], fluid_center - midpoint) > 0:
            normals = -normals

    return positions, normals, tangents


def _jitter(points: numpy.ndarray, spacing: float, jitter: float, rng) -> numpy.ndarray:
    if not jitter or len(points) == 0:
        return points
    return points + rng.uniform(-jitter * spacing, jitter * spacing, size=points.shape)


def _shared_edge(fluid_region: Rectangle, porous_region: Rectangle, curve: LineSegment):
    """Validate that the line segment interface is the common edge of the two rectangles."""
    if fluid_region.overlap_area(porous_region) > TOLERANCE_POSITION:
        raise RegionOverlapError('the fluid and porous rectangles overlap')

    ends = numpy.array([curve.start, curve.end], dtype=float)
    for region in (fluid_region, porous_region):
        if not numpy.all(region.on_boundary(ends)):
            raise RegionOverlapError(f'the interface {curve.start} - {curve.end} is not on the edge of {region}')

    samples = curve.polyline(64)
    if not numpy.all(fluid_region.on_boundary(samples)) or not numpy.all(porous_region.on_boundary(samples)):
        raise RegionOverlapError('the interface is not the common edge of the fluid and porous rectangles')


def _generate_linear(fluid_region, porous_region, curve: LineSegment, nx, n_gamma, jitter, rng):
    domain = fluid_region.bounding(porous_region)
    spacing = _spacing(domain, nx)
    _shared_edge(fluid_region, porous_region, curve)

    if n_gamma is None:
        n_gamma = max(int(round(curve.length() / spacing)) - 1, 1)

    blocks = {}

    for side, region in ((Side.FLUID, fluid_region), (Side.POROUS, porous_region)):
        grid = region.grid(spacing)
        on_interface = curve.distance(grid) < TOLERANCE_POSITION
        is_corner = numpy.min(numpy.linalg.norm(grid[:, None, :] - numpy.array([curve.start, curve.end]), axis=2),
                              axis=1) < TOLERANCE_POSITION
        on_boundary = region.on_boundary(grid)

        if side is Side.FLUID:
            boundary = grid[on_boundary & (~on_interface | is_corner)]
        else:
            boundary = grid[on_boundary & ~on_interface]

        interior = _jitter(grid[~on_boundary], spacing, jitter, rng)
        interior = interior[curve.distance(interior) >= REMOVAL_FRACTION * spacing]
        blocks[side] = (boundary, interior)

    positions, normals, tangents = _interface_samples(curve, n_gamma, fluid_region.center)
    return blocks, (positions, normals, tangents), domain, spacing


def _generate_closed(domain: Rectangle, curve: ClosedCurve, nx, n_gamma, jitter, rng):
    spacing = _spacing(domain, nx)
    polyline = curve.polyline()

    if not numpy.all(domain.contains(polyline)):
        raise RegionOverlapError(f'the {curve.kind.value} interface touches or leaves the domain {domain}')

    if n_gamma is None:
        n_gamma = max(8, math.ceil(curve.length() / spacing))

    grid = domain.grid(spacing)
    on_boundary = domain.on_boundary(grid)
    interior = _jitter(grid[~on_boundary], spacing, jitter, rng)

    distance, _ = cKDTree(polyline).query(interior)
    interior = interior[distance >= REMOVAL_FRACTION * spacing]
    inside = curve.contains(interior)

    blocks = {
        Side.FLUID: (grid[on_boundary], interior[~inside]),
        Side.POROUS: (numpy.empty((0, 2)), interior[inside]),
    }
    return blocks, _interface_samples(curve, n_gamma, None), domain, spacing


def generate_cloud(
    fluid_region: Rectangle,
    porous_region: Optional[Rectangle],
    interface: InterfaceCurve,
    nx: int,
    n_gamma: Optional[int] = None,
    *,
    jitter: float = 0.,
    seed: Optional[int] = None,
) -> NodeSet:
    """Generate the classified collocation nodes of the coupled problem.

    For a line segment interface the fluid and porous regions are two rectangles sharing the segment as an edge. For a
    closed interface ``fluid_region`` is the global rectangle, ``porous_region`` must be ``None`` and the porous region
    is the inside of the curve. Each region is covered by a grid of spacing ``h = width / nx`` where the width is that
    of the global rectangle; grid nodes within ``0.4 h`` of the interface are replaced by ``n_gamma`` pairs of
    co-located interface nodes sampled from the curve.

    :param fluid_region: the fluid rectangle, or the global rectangle for closed interfaces
    :param porous_region: the porous rectangle, ``None`` for closed interfaces
    :param interface: the interface curve
    :param nx: number of grid intervals across the global width
    :param n_gamma: number of interface pairs, defaults to ``nx - 1`` for segments and ``max(8, ceil(L / h))`` otherwise
    :param jitter: random displacement of interior nodes as a fraction of the spacing
    :param seed: seed of the random generator used for the jitter
    :raises ValueError: for invalid ``nx``, ``n_gamma`` or ``jitter``
    :raises RegionOverlapError: if the interface is incompatible with the regions
    :raises DegenerateCurveError: if the curve is degenerate at a sampled parameter
    """
    if nx < 4:
        raise ValueError(f'nx must be at least 4, got {nx}')

    if not 0 <= jitter <= MAX_JITTER:
        raise ValueError(f'jitter must be in [0, {MAX_JITTER}], got {jitter}')

    rng = numpy.random.default_rng(seed)

    if interface.kind.is_closed:
        if porous_region is not None:
            raise RegionOverlapError('a closed interface encloses the porous region, no porous rectangle is allowed')
        if n_gamma is not None and n_gamma < 8:
            raise ValueError(f'n_gamma must be at least 8 for closed interfaces, got {n_gamma}')
        blocks, samples, domain, spacing = _generate_closed(fluid_region, interface, nx, n_gamma, jitter, rng)
    else:
        if porous_region is None:
            raise RegionOverlapError('a line segment interface requires a porous rectangle')
        if n_gamma is not None and n_gamma < 1:
            raise ValueError(f'n_gamma must be positive, got {n_gamma}')
        blocks, samples, domain, spacing = _generate_linear(
            fluid_region, porous_region, interface, nx, n_gamma, jitter, rng
        )

    interface_positions, interface_normals, interface_tangents = samples
    n_pairs = len(interface_positions)

    positions, sides, kinds, normals, tangents = [], [], [], [], []

    for side, kind in NODE_CLASSES:
        if kind is NodeKind.INTERFACE:
            block = interface_positions
            sign = 1. if side is Side.FLUID else -1.
            normals.append(sign * interface_normals)
            tangents.append(interface_tangents)
        else:
            boundary, interior = blocks[side]
            block = boundary if kind is NodeKind.BOUNDARY else interior
            normals.append(numpy.full((len(block), 2), numpy.nan))
            tangents.append(numpy.full((len(block), 2), numpy.nan))

        positions.append(numpy.asarray(block, dtype=float).reshape(-1, 2))
        sides.append(numpy.full(len(block), side.value))
        kinds.append(numpy.full(len(block), kind.value))

    positions = numpy.vstack(positions)
    partners = numpy.full(len(positions), -1, dtype=int)

    offset_fluid = len(blocks[Side.FLUID][0])
    offset_porous = offset_fluid + n_pairs + len(blocks[Side.FLUID][1]) + len(blocks[Side.POROUS][0])
    fluid_interface = numpy.arange(offset_fluid, offset_fluid + n_pairs)
    porous_interface = numpy.arange(offset_porous, offset_porous + n_pairs)
    partners[fluid_interface] = porous_interface
    partners[porous_interface] = fluid_interface

    cloud = NodeSet(
        positions,
        numpy.concatenate(sides),
        numpy.concatenate(kinds),
        numpy.vstack(normals),
        numpy.vstack(tangents),
        partners,
        spacing=spacing,
        domain=domain,
        interface=interface,
        porous_region=porous_region,
    )
    LOGGER.debug(f'generated {cloud!r} with spacing {spacing:.4e}')

    return cloud


def write_cloud_csv(cloud: NodeSet, filepath: Union[str, pathlib.Path]) -> pathlib.Path:
    """Write the nodes as CSV with columns ``index, x, y, side, kind, nx, ny, tx, ty``.

    Normal and tangent cells are empty for nodes that are not on the interface.
    """
    filepath = pathlib.Path(filepath)

    with filepath.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(['index', 'x', 'y', 'side', 'kind', 'nx', 'ny', 'tx', 'ty'])
        for index in range(len(cloud)):
            row = [
                index, *cloud.positions[index], cloud.sides[index], cloud.kinds[index], *cloud.normals[index],
                *cloud.tangents[index]
            ]
            writer.writerow([format_value(value) for value in row])

    return filepath
