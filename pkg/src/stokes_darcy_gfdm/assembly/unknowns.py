# -*- coding: utf-8 -*-
"""Mapping of nodal unknowns to columns of the coupled system."""
from typing import Dict

import numpy

from ..common.exceptions import GeometryError
from ..common.types import Field, Side
from ..pointcloud.cloud import NodeSet

__all__ = ('UnknownMap',)

FLUID_FIELDS = (Field.U1, Field.U2, Field.P)


class UnknownMap:
    """Bijection between ``(node, field)`` pairs and the columns of the coupled system.

    With ``n_f`` fluid nodes, which precede the porous nodes in the cloud, fluid node ``j`` owns the columns ``j``,
    ``n_f + j`` and ``2 n_f + j`` for ``u1``, ``u2`` and ``p``; porous node ``j`` owns column ``3 n_f + (j - n_f)`` for
    ``phi``. Within each block the nodes keep the cloud order: boundary, interface, interior.
    """

    def __init__(self, cloud: NodeSet):
        fluid = cloud.indices(Side.FLUID)
        porous = cloud.indices(Side.POROUS)

        if len(fluid) and len(porous) and fluid.max() > porous.min():
            raise GeometryError('fluid nodes must precede porous nodes in the node set')

        self.n_fluid = len(fluid)
        self.n_porous = len(porous)
        self.n_nodes = len(cloud)

    @property
    def size(self) -> int:
        return 3 * self.n_fluid + self.n_porous

    def offset(self, field: Field) -> int:
        """Return the first column of a field block."""
        return {Field.U1: 0, Field.U2: self.n_fluid, Field.P: 2 * self.n_fluid, Field.PHI: 3 * self.n_fluid}[field]

    def field_slice(self, field: Field) -> slice:
        start = self.offset(field)
        length = self.n_porous if field is Field.PHI else self.n_fluid
        return slice(start, start + length)

    def column(self, node: int, field: Field):
        """Return the column of a field at a node, or an array of columns for an array of nodes.

        :raises KeyError: if the field does not live on the side of the node
        """
        nodes = numpy.asarray(node, dtype=int)
        if field is Field.PHI:
            local = nodes - self.n_fluid
            valid = (local >= 0) & (local < self.n_porous)
        else:
            local = nodes
            valid = (local >= 0) & (local < self.n_fluid)

        if not numpy.all(valid):
            raise KeyError(f'field {field.value} has no unknown at node(s) {nodes[~valid] if nodes.ndim else nodes}')

        columns = self.offset(field) + local
        return int(columns) if columns.ndim == 0 else columns

    def nodal_slice(self, field: Field) -> slice:
        """Return the slice of cloud node indices on which a field lives."""
        if field is Field.PHI:
            return slice(self.n_fluid, self.n_nodes)
        return slice(0, self.n_fluid)

    def pack(self, values: Dict[Field, numpy.ndarray]) -> numpy.ndarray:
        """Return the unknown vector from nodal arrays of length ``N`` per field."""
        vector = numpy.zeros(self.size)
        for field in Field:
            vector[self.field_slice(field)] = numpy.asarray(values[field], dtype=float)[self.nodal_slice(field)]
        return vector

    def unpack(self, vector: numpy.ndarray) -> Dict[Field, numpy.ndarray]:
        """Return nodal arrays of length ``N`` per field, NaN on nodes of the other side."""
        vector = numpy.asarray(vector, dtype=float)
        if vector.shape != (self.size,):
            raise ValueError(f'expected a vector of length {self.size}, got shape {vector.shape}')

        values = {}
        for field in Field:
            nodal = numpy.full(self.n_nodes, numpy.nan)
            nodal[self.nodal_slice(field)] = vector[self.field_slice(field)]
            values[field] = nodal
        return values
