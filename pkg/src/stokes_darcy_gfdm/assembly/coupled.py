# -*- coding: utf-8 -*-
"""Assembly of the square collocation system of the coupled Stokes-Darcy problem.

Every fluid node contributes three rows, placed on the rows that carry the indices of its ``u1``, ``u2`` and ``p``
columns; every porous node contributes one row on the index of its ``phi`` column. Rows are filled per node class from
sparse derivative operators, so the assembly works on whole classes of nodes at once.
"""
import dataclasses
import logging
import pathlib
from typing import Dict, List, Optional, Union

import numpy
from scipy import sparse

from ..common.exceptions import UnmatchedInterfaceNodeError
from ..common.types import Field, NodeKind, PorousBoundary, Side
from ..pointcloud.cloud import NodeSet
from ..problems.manufactured import ProblemSpec, divergence_of_forcing
from ..stencil.coefficients import StencilSet
from .unknowns import UnknownMap

__all__ = ('CoupledSystem', 'assemble', 'exact_solution', 'write_system')

LOGGER = logging.getLogger(__name__)

DERIVATIVES = ('x', 'y', 'xx', 'yy', 'xy')


@dataclasses.dataclass(frozen=True)
class CoupledSystem:
    """Sparse square system ``matrix X = rhs`` with the map of its unknowns."""

    matrix: sparse.csr_matrix
    rhs: numpy.ndarray
    unknowns: UnknownMap
    cloud: NodeSet
    stencils: StencilSet
    conductivity: float = 1.

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


class _TripletBuilder:
    """Accumulates row blocks as coordinate triplets of the global matrix."""

    def __init__(self, unknowns: UnknownMap):
        self.unknowns = unknowns
        self.rows: List[numpy.ndarray] = []
        self.cols: List[numpy.ndarray] = []
        self.data: List[numpy.ndarray] = []
        self.rhs = numpy.zeros(unknowns.size)
        self.filled = numpy.zeros(unknowns.size, dtype=bool)

    def add(self, rows: numpy.ndarray, blocks: Dict[Field, sparse.spmatrix], rhs: numpy.ndarray):
        """Add one equation per entry of ``rows``.

        Each block acts on nodal values of one field, i.e. it has ``N`` columns; it is placed on the columns of that
        field through the unknown map.
        """
        if len(rows) == 0:
            return

        for field, block in blocks.items():
            block = block.tocoo()
            nodal = self.unknowns.nodal_slice(field)
            keep = (block.col >= nodal.start) & (block.col < nodal.stop)

            if not numpy.all(keep[block.data != 0]):
                raise ValueError(f'a {field.value} block references nodes on which the field does not live')

            self.rows.append(rows[block.row[keep]])
            self.cols.append(self.unknowns.column(block.col[keep], field))
            self.data.append(block.data[keep])

        if numpy.any(self.filled[rows]):
            raise ValueError('equation rows are filled twice')

        self.filled[rows] = True
        self.rhs[rows] = rhs

    def matrix(self) -> sparse.csr_matrix:
        size = self.unknowns.size
        matrix = sparse.csr_matrix(
            (numpy.concatenate(self.data), (numpy.concatenate(self.rows), numpy.concatenate(self.cols))),
            shape=(size, size),
        )
        matrix.eliminate_zeros()
        return matrix


def _selection(nodes: numpy.ndarray, size: int) -> sparse.csr_matrix:
    """Return the matrix that picks the values of ``nodes`` out of a nodal vector."""
    return sparse.csr_matrix((numpy.ones(len(nodes)), (numpy.arange(len(nodes)), nodes)), shape=(len(nodes), size))


def _scaled(weights: numpy.ndarray, operator: sparse.spmatrix) -> sparse.csr_matrix:
    return sparse.csr_matrix(operator.multiply(numpy.asarray(weights, dtype=float)[:, None]))


def exact_solution(system: CoupledSystem, spec: ProblemSpec) -> numpy.ndarray:
    """Return the vector of exact nodal values of all unknowns."""
    positions = system.cloud.positions
    return system.unknowns.pack({field: spec.exact(field, positions) for field in Field})


def assemble(
    cloud: NodeSet,
    stencils: StencilSet,
    spec: ProblemSpec,
    *,
    porous_boundary: PorousBoundary = PorousBoundary.DIRICHLET,
    divergence_augmented_pressure: bool = False,
    flux_stencils: Optional[StencilSet] = None,
) -> CoupledSystem:
    """Assemble the coupled collocation system.

    Boundary and interface rows carry the exact values of their functionals as right-hand side.

    :param cloud: the node set
    :param stencils: stencils of every node of the cloud
    :param spec: the problem with its coefficients, exact fields and forcings
    :param porous_boundary: condition on the outer boundary of the porous region
    :param divergence_augmented_pressure: add the velocity divergence to the pressure equation of fluid interior nodes
    :param flux_stencils: stencils of the porous boundary nodes used for the flux rows of a Neumann boundary, by default
        ``stencils``
    :raises UnmatchedInterfaceNodeError: if an interface node has no partner on the other side
    :raises MissingStencilError: if a node has no stencil
    """
    stencils.require(range(len(cloud)))
    unknowns = UnknownMap(cloud)
    builder = _TripletBuilder(unknowns)
    size = len(cloud)
    nu, kappa, g, beta = spec.nu, spec.kappa, spec.g, spec.beta_bjs
    positions = cloud.positions

    operators = {label: stencils.derivative_matrix(label) for label in DERIVATIVES}
    Dx, Dy, Dxx, Dyy, Dxy = (operators[label] for label in DERIVATIVES)

    def rows_of(nodes, field):
        return unknowns.column(nodes, field)

    def exact(field, nodes, derivative=(0, 0)):
        return spec.exact(field, positions[nodes], derivative)

    def closure(nodes):
        """Rows of ``du1/dx + du2/dy + p`` with the exact pressure plus the exact divergence as data."""
        builder.add(
            rows_of(nodes, Field.P),
            {Field.U1: Dx[nodes], Field.U2: Dy[nodes], Field.P: _selection(nodes, size)},
            exact(Field.P, nodes) + spec.velocity_divergence(positions[nodes]),
        )

    # Fluid boundary: Dirichlet velocity and the pressure closure.
    nodes = cloud.indices(Side.FLUID, NodeKind.BOUNDARY)
    for field in (Field.U1, Field.U2):
        builder.add(rows_of(nodes, field), {field: _selection(nodes, size)}, exact(field, nodes))
    closure(nodes)

    # Fluid interior: momentum and pressure Poisson equations.
    nodes = cloud.indices(Side.FLUID, NodeKind.INTERIOR)
    builder.add(
        rows_of(nodes, Field.U1),
        {Field.U1: -2 * nu * Dxx[nodes] - nu * Dyy[nodes], Field.U2: -nu * Dxy[nodes], Field.P: Dx[nodes]},
        spec.evaluate_forcing('f1', positions[nodes]),
    )
    builder.add(
        rows_of(nodes, Field.U2),
        {Field.U1: -nu * Dxy[nodes], Field.U2: -nu * Dxx[nodes] - 2 * nu * Dyy[nodes], Field.P: Dy[nodes]},
        spec.evaluate_forcing('f2', positions[nodes]),
    )
    pressure = {Field.P: Dxx[nodes] + Dyy[nodes]}
    pressure_rhs = divergence_of_forcing(spec, positions[nodes])
    if divergence_augmented_pressure:
        pressure.update({Field.U1: Dx[nodes], Field.U2: Dy[nodes]})
        pressure_rhs = pressure_rhs + spec.velocity_divergence(positions[nodes])
    builder.add(rows_of(nodes, Field.P), pressure, pressure_rhs)

    # Interface pairs.
    fluid = cloud.indices(Side.FLUID, NodeKind.INTERFACE)
    porous = cloud.partners[fluid]

    if numpy.any(porous < 0) or numpy.any(cloud.sides[porous] != Side.POROUS.value):
        raise UnmatchedInterfaceNodeError('a fluid interface node has no porous partner')

    n1, n2 = cloud.normals[fluid, 0], cloud.normals[fluid, 1]
    t1, t2 = cloud.tangents[fluid, 0], cloud.tangents[fluid, 1]
    identity = _selection(fluid, size)
    u1_x, u1_y = exact(Field.U1, fluid, (1, 0)), exact(Field.U1, fluid, (0, 1))
    u2_x, u2_y = exact(Field.U2, fluid, (1, 0)), exact(Field.U2, fluid, (0, 1))
    u1, u2 = exact(Field.U1, fluid), exact(Field.U2, fluid)
    phi_x, phi_y = exact(Field.PHI, porous, (1, 0)), exact(Field.PHI, porous, (0, 1))

    # Mass conservation u.n_f - K grad(phi).n_p with n_p = -n_f, on the u1 rows of fluid interface nodes.
    builder.add(
        rows_of(fluid, Field.U1),
        {
            Field.U1: _scaled(n1, identity),
            Field.U2: _scaled(n2, identity),
            Field.PHI: _scaled(kappa * n1, Dx[porous]) + _scaled(kappa * n2, Dy[porous]),
        },
        n1 * u1 + n2 * u2 + kappa * (n1 * phi_x + n2 * phi_y),
    )

    # Tangential friction -2 nu n.D(u).t - beta u.t, on the u2 rows of fluid interface nodes.
    shear = 0.5 * (n1 * t2 + n2 * t1)
    builder.add(
        rows_of(fluid, Field.U2),
        {
            Field.U1: _scaled(-2 * nu * n1 * t1, Dx[fluid]) + _scaled(-2 * nu * shear, Dy[fluid]) +
            _scaled(-beta * t1, identity),
            Field.U2: _scaled(-2 * nu * shear, Dx[fluid]) + _scaled(-2 * nu * n2 * t2, Dy[fluid]) +
            _scaled(-beta * t2, identity),
        },
        -2 * nu * (n1 * t1 * u1_x + shear * (u1_y + u2_x) + n2 * t2 * u2_y) - beta * (t1 * u1 + t2 * u2),
    )

    closure(fluid)

    # Normal stress balance p - 2 nu n.D(u).n - g phi, on the phi rows of porous interface nodes.
    builder.add(
        rows_of(porous, Field.PHI),
        {
            Field.P: identity,
            Field.U1: _scaled(-2 * nu * n1 * n1, Dx[fluid]) + _scaled(-2 * nu * n1 * n2, Dy[fluid]),
            Field.U2: _scaled(-2 * nu * n1 * n2, Dx[fluid]) + _scaled(-2 * nu * n2 * n2, Dy[fluid]),
            Field.PHI: _scaled(numpy.full(len(porous), -g), _selection(porous, size)),
        },
        exact(Field.P, fluid) - 2 * nu * (n1 * n1 * u1_x + n1 * n2 * (u1_y + u2_x) + n2 * n2 * u2_y) -
        g * exact(Field.PHI, porous),
    )

    # Porous boundary.
    nodes = cloud.indices(Side.POROUS, NodeKind.BOUNDARY)
    dirichlet = nodes

    if porous_boundary is PorousBoundary.NEUMANN and len(nodes):
        normals = cloud.boundary_normals()[nodes]
        flux = ~numpy.isnan(normals[:, 0])
        dirichlet, neumann = nodes[~flux], nodes[flux]
        m1, m2 = normals[flux, 0], normals[flux, 1]
        flux_stencils = stencils if flux_stencils is None else flux_stencils
        flux_x, flux_y = (flux_stencils.derivative_matrix(label, neumann)[neumann] for label in ('x', 'y'))
        builder.add(
            rows_of(neumann, Field.PHI),
            {Field.PHI: _scaled(-kappa * m1, flux_x) + _scaled(-kappa * m2, flux_y)},
            -kappa * (m1 * exact(Field.PHI, neumann, (1, 0)) + m2 * exact(Field.PHI, neumann, (0, 1))),
        )

    builder.add(rows_of(dirichlet, Field.PHI), {Field.PHI: _selection(dirichlet, size)}, exact(Field.PHI, dirichlet))

    # Porous interior: Darcy equation.
    nodes = cloud.indices(Side.POROUS, NodeKind.INTERIOR)
    builder.add(
        rows_of(nodes, Field.PHI),
        {Field.PHI: -kappa * (Dxx[nodes] + Dyy[nodes])},
        spec.evaluate_forcing('fp', positions[nodes]),
    )

    if not numpy.all(builder.filled):
        raise ValueError(f'{numpy.count_nonzero(~builder.filled)} rows of the coupled system were not filled')

    matrix = builder.matrix()
    LOGGER.debug(f'assembled a system of {matrix.shape[0]} unknowns with {matrix.nnz} nonzeros')

    return CoupledSystem(
        matrix=matrix, rhs=builder.rhs, unknowns=unknowns, cloud=cloud, stencils=stencils, conductivity=kappa
    )


def write_system(system: CoupledSystem, directory: Union[str, pathlib.Path], prefix: Optional[str] = None) -> tuple:
    """Write the matrix in coordinate format ``row col value`` and the right-hand side, one value per line.

    :returns: the paths of the matrix and right-hand side files
    """
    directory = pathlib.Path(directory)
    prefix = f'{prefix}_' if prefix else ''
    matrix_path = directory / f'{prefix}matrix.txt'
    rhs_path = directory / f'{prefix}rhs.txt'
    coordinates = system.matrix.tocoo()

    with matrix_path.open('w', encoding='utf-8') as handle:
        for row, col, value in zip(coordinates.row, coordinates.col, coordinates.data):
            handle.write(f'{row:d} {col:d} {value:.16e}\n')

    with rhs_path.open('w', encoding='utf-8') as handle:
        for value in system.rhs:
            handle.write(f'{value:.16e}\n')

    return matrix_path, rhs_path
