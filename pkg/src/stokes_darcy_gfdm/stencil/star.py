# -*- coding: utf-8 -*-
"""Selection of one-sided stars and the quartic distance weight."""
import dataclasses

import numpy

from ..common.exceptions import InsufficientNeighborsError
from ..common.types import Side
from ..pointcloud.cloud import NodeSet

__all__ = ('Star', 'select_star', 'weight')


def weight(distance, d_max):
    """Return the quartic weight ``1 - 6q^2 + 8q^3 - 3q^4`` with ``q = d / d_max``, zero beyond ``d_max``.

    Accepts scalars and arrays.
    """
    q = numpy.asarray(distance, dtype=float) / d_max
    result = numpy.where(q <= 1., (1. - q)**3 * (1. + 3. * q), 0.)
    return float(result) if result.ndim == 0 else result


@dataclasses.dataclass(frozen=True)
class Star:
    """A center node with its ``m`` nearest neighbours on the same side of the interface."""

    center: int
    neighbors: numpy.ndarray
    offsets: numpy.ndarray
    distances: numpy.ndarray

    @property
    def m(self) -> int:
        return len(self.neighbors)

    @property
    def d_max(self) -> float:
        return float(numpy.max(self.distances))

    @property
    def weights(self) -> numpy.ndarray:
        return weight(self.distances, self.d_max)

    @property
    def nodes(self) -> numpy.ndarray:
        """Return the center followed by the neighbours, the column order of the stencil."""
        return numpy.concatenate([[self.center], self.neighbors])


def select_star(cloud: NodeSet, center: int, m: int) -> Star:
    """Return the star of the ``m`` nodes nearest to ``center`` on the same side of the interface.

    Interface nodes belong to their own side, so stars never reach across the interface. Equal distances are resolved in
    favour of the lower node index.

    :raises InsufficientNeighborsError: if the side holds fewer than ``m`` other nodes
    """
    side = Side(cloud.sides[center])
    tree, indices = cloud.side_tree(side)

    if len(indices) - 1 < m:
        raise InsufficientNeighborsError(
            f'node {center} has {len(indices) - 1} {side.value} neighbours, {m} are required'
        )

    position = cloud.positions[center]
    distances, _ = tree.query(position, k=m + 1)
    radius = distances[-1] * (1. + 1E-12)

    candidates = indices[numpy.asarray(tree.query_ball_point(position, radius), dtype=int)]
    candidates = candidates[candidates != center]
    offsets = cloud.positions[candidates] - position
    lengths = numpy.hypot(offsets[:, 0], offsets[:, 1])

    order = numpy.lexsort((candidates, numpy.round(lengths, 14)))[:m]

    return Star(center=int(center), neighbors=candidates[order], offsets=offsets[order], distances=lengths[order])
