# -*- coding: utf-8 -*-
"""Weighted least-squares derivative stencils and their assembly into sparse derivative operators."""
import concurrent.futures
import csv
import dataclasses
import logging
import pathlib
from typing import Iterable, Optional, Union

import numpy
from scipy import sparse

from ..common.exceptions import MissingStencilError, NotPositiveDefiniteError, SingularStarError
from ..pointcloud.cloud import NodeSet
from ..utils.convert import format_value
from ..utils.mapping import emit_logs, get_logging_container
from .basis import DerivativeBasis
from .cholesky import cholesky_solve_spd
from .star import Star, select_star

__all__ = ('StencilCoefficients', 'StencilSet', 'build_stencil', 'build_stencils', 'apply_derivative',
           'write_stencils_csv')

LOGGER = logging.getLogger(__name__)

#: Stars reaching further than this many node spacings are reported.
WIDE_STAR_FACTOR = 6.


@dataclasses.dataclass(frozen=True)
class StencilCoefficients:
    """Matrix ``E`` mapping the values on a star to derivative estimates at its center.

    Column 0 belongs to the center, columns ``1..m`` to the neighbours in star order; rows follow the basis.
    """

    basis: DerivativeBasis
    nodes: numpy.ndarray
    matrix: numpy.ndarray

    @property
    def center(self) -> int:
        return int(self.nodes[0])

    def row(self, derivative) -> numpy.ndarray:
        """Return the coefficients of one derivative, given by row index, label or multi-index."""
        return self.matrix[self.basis.index(derivative)]


def build_stencil(star: Star, order: Union[int, DerivativeBasis]) -> StencilCoefficients:
    """Return the derivative stencil of a star.

    The Taylor terms are formed from offsets scaled by ``d_max``. With ``P`` the matrix of Taylor terms and ``W`` the
    diagonal of squared weights, ``E = A^-1 B`` with ``A = P^T W P`` and ``B = [-sum_k W_k P_k | W_k P_k]``, solved
    through the Cholesky factor of ``D A D`` with ``D = diag(A)^-1/2``. Rows of degree ``s`` are finally divided by
    ``d_max^s``.

    :raises SingularStarError: if ``A`` is numerically singular, for instance for a collinear star
    """
    basis = order if isinstance(order, DerivativeBasis) else DerivativeBasis(order)

    if star.m < basis.count:
        raise SingularStarError(f'star of node {star.center} has {star.m} neighbours, the basis needs {basis.count}')

    d_max = star.d_max
    taylor = basis.taylor_matrix(star.offsets / d_max)
    weighted = taylor * star.weights[:, None]**2

    normal = taylor.T @ weighted
    rhs = weighted.T

    # Symmetric diagonal equilibration of the normal matrix.
    diagonal = numpy.diag(normal)
    if numpy.any(diagonal <= 0.):
        raise SingularStarError(f'normal equations of the star of node {star.center} have an empty Taylor column')
    equilibration = 1. / numpy.sqrt(diagonal)
    normal = normal * numpy.outer(equilibration, equilibration)

    try:
        neighbors = equilibration[:, None] * cholesky_solve_spd(normal, equilibration[:, None] * rhs)
    except NotPositiveDefiniteError as exception:
        raise SingularStarError(f'normal equations of the star of node {star.center} are singular') from exception

    # Center column: rows sum to zero.
    scaled = numpy.hstack([-neighbors.sum(axis=1)[:, None], neighbors])
    matrix = scaled / d_max**basis.degrees[:, None]

    return StencilCoefficients(basis=basis, nodes=star.nodes, matrix=matrix)


def apply_derivative(stencil: StencilCoefficients, row, values: numpy.ndarray) -> float:
    """Return the derivative estimate at the center of the star from values ordered as (center, neighbours...)."""
    return float(stencil.row(row) @ numpy.asarray(values, dtype=float))


class StencilSet:
    """The stencils of a node set, stored as dense ``(N, count, m + 1)`` coefficients and ``(N, m + 1)`` columns.

    Rows of nodes without a stencil hold zeros and are flagged in ``available``.
    """

    def __init__(self, cloud: NodeSet, basis: DerivativeBasis, m: int):
        self.cloud = cloud
        self.basis = basis
        self.m = m
        self.columns = numpy.zeros((len(cloud), m + 1), dtype=int)
        self.coefficients = numpy.zeros((len(cloud), basis.count, m + 1))
        self.available = numpy.zeros(len(cloud), dtype=bool)

    def __len__(self) -> int:
        return int(numpy.count_nonzero(self.available))

    def __contains__(self, node) -> bool:
        return bool(self.available[node])

    def __getitem__(self, node: int) -> StencilCoefficients:
        self.require([node])
        return StencilCoefficients(basis=self.basis, nodes=self.columns[node], matrix=self.coefficients[node])

    def add(self, stencil: StencilCoefficients):
        """Store a stencil with ``m + 1`` columns."""
        node = stencil.center
        self.columns[node] = stencil.nodes
        self.coefficients[node] = stencil.matrix
        self.available[node] = True

    def require(self, nodes: Iterable[int]):
        """Raise if any of the nodes has no stencil.

        :raises MissingStencilError: naming the first node without a stencil
        """
        nodes = numpy.asarray(list(nodes) if not isinstance(nodes, numpy.ndarray) else nodes, dtype=int)
        missing = nodes[~self.available[nodes]]
        if len(missing):
            raise MissingStencilError(f'no stencil for node {missing[0]} ({len(missing)} nodes without stencil)')

    def derivative_matrix(self, derivative, nodes: Optional[numpy.ndarray] = None) -> sparse.csr_matrix:
        """Return the sparse ``N x N`` operator whose row ``i`` holds the coefficients of a derivative at node ``i``.

        :param derivative: row index, label or multi-index of the derivative
        :param nodes: the rows to fill, by default all nodes with a stencil; other rows are empty
        :raises MissingStencilError: if one of the requested nodes has no stencil
        """
        nodes = numpy.flatnonzero(self.available) if nodes is None else numpy.asarray(nodes, dtype=int)
        self.require(nodes)
        row = self.basis.index(derivative)
        size = len(self.cloud)
        return sparse.csr_matrix(
            (
                self.coefficients[nodes, row, :].ravel(),
                (numpy.repeat(nodes, self.m + 1), self.columns[nodes].ravel()),
            ),
            shape=(size, size),
        )

    def apply(self, derivative, values: numpy.ndarray, nodes: Optional[numpy.ndarray] = None) -> numpy.ndarray:
        """Return derivative estimates of a nodal field at the given nodes, or at every node with a stencil.

        ``values`` holds one entry per node of the cloud. The result has one entry per requested node.
        """
        nodes = numpy.flatnonzero(self.available) if nodes is None else numpy.asarray(nodes, dtype=int)
        self.require(nodes)
        row = self.basis.index(derivative)
        values = numpy.asarray(values, dtype=float)
        return numpy.einsum('ij,ij->i', self.coefficients[nodes, row, :], values[self.columns[nodes]])


def build_stencils(
    cloud: NodeSet,
    order: int,
    m: int,
    nodes: Optional[Iterable[int]] = None,
    workers: int = 1,
) -> StencilSet:
    """Build the stencils of all nodes of a cloud, or of a subset.

    :param cloud: the node set
    :param order: the truncation order
    :param m: the number of neighbours per star
    :param nodes: optional subset of node indices
    :param workers: number of threads used to build the stencils
    :raises InsufficientNeighborsError: if a side holds too few nodes for the star size
    :raises SingularStarError: if the normal equations of a star are singular
    """
    basis = DerivativeBasis(order)

    if m < basis.count:
        raise ValueError(f'm = {m} is smaller than the {basis.count} derivatives of order {order}')

    stencils = StencilSet(cloud, basis, m)
    nodes = range(len(cloud)) if nodes is None else nodes

    logs = get_logging_container()

    def build(node):
        star = select_star(cloud, node, m)
        if star.d_max > WIDE_STAR_FACTOR * cloud.spacing:
            logs['debug'].append(f'star of node {node} reaches {star.d_max / cloud.spacing:.1f} spacings')
        return build_stencil(star, basis)

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(build, nodes))
    else:
        results = [build(node) for node in nodes]

    for stencil in results:
        stencils.add(stencil)

    emit_logs(LOGGER, logs)

    magnitudes = numpy.abs(stencils.coefficients[stencils.available]).max(axis=(1, 2))
    LOGGER.debug(f'built {len(stencils)} stencils of order {order} with m = {m}, largest coefficient '
                 f'{magnitudes.max(initial=0.):.3e}')

    return stencils


def write_stencils_csv(stencils: StencilSet, filepath: Union[str, pathlib.Path]) -> pathlib.Path:
    """Write all stencil coefficients as CSV with columns ``node, row, column, coefficient``.

    The ``row`` is the derivative label and ``column`` the global index of the node the coefficient multiplies.
    """
    filepath = pathlib.Path(filepath)
    labels = stencils.basis.labels

    with filepath.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(['node', 'row', 'column', 'coefficient'])
        for node in numpy.flatnonzero(stencils.available):
            for row, label in enumerate(labels):
                for column, coefficient in zip(stencils.columns[node], stencils.coefficients[node, row]):
                    writer.writerow(
                        [format_value(int(node)), label, format_value(int(column)), format_value(coefficient)]
                    )

    return filepath
