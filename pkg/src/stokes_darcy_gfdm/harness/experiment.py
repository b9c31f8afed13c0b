# -*- coding: utf-8 -*-
"""Experiments: manufactured-solution solves over grids of resolutions, time slices and coefficients."""
import concurrent.futures
import copy
import dataclasses
import itertools
import logging
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple

import jsonschema

from ..assembly.coupled import CoupledSystem, assemble
from ..common.exceptions import NonPositiveError, StokesDarcyError
from ..common.types import CurveKind, NodeKind, PorousBoundary, Side
from ..norms import NORMS, REPORTED_FIELDS, ErrorReport, convergence_order, error_norms, pairwise_orders
from ..pointcloud.cloud import NodeSet, generate_cloud
from ..pointcloud.curves import InterfaceCurve, Rectangle, build_curve
from ..pointcloud.motion import LinearPath, MotionSpec, interface_at_time
from ..problems.examples import MANUFACTURED_SOLUTIONS, get_manufactured_solution
from ..problems.manufactured import ProblemSpec, check_manufactured_consistency
from ..solver import SolutionField, solve
from ..stencil.basis import SUPPORTED_ORDERS
from ..stencil.coefficients import StencilSet, build_stencils
from .protocols.utils import ProtocolMixin

__all__ = ('ExperimentConfig', 'ExperimentResult', 'OrderFit', 'SweepResult', 'run_example', 'sweep', 'fit_orders',
           'SWEEP_PARAMETERS')

LOGGER = logging.getLogger(__name__)

SWEEP_PARAMETERS = ('nx', 'm', 'nu', 'kappa')

MOVING_INTERFACES = (CurveKind.PENTAGON.value, CurveKind.ELLIPSE.value)

# Orders above the solve order and star sizes of the flux stencils on a Neumann porous boundary.
FLUX_ORDER_INCREMENT = 2
FLUX_STAR_SIZES = {4: 40, 6: 140}


def get_config_schema() -> dict:
    """Return the schema of the resolved experiment inputs."""
    number = {'type': 'number'}
    positive = {'type': 'number', 'exclusiveMinimum': 0}
    bounds = {'type': 'array', 'items': number, 'minItems': 4, 'maxItems': 4}
    point = {'type': 'array', 'items': number, 'minItems': 2, 'maxItems': 2}

    return {
        '$schema': 'http://json-schema.org/draft-07/schema',
        'type': 'object',
        'required': ['example', 'order', 'm', 'nx', 'interface', 'geometry', 'coefficients', 'solution'],
        'properties': {
            'protocol': {'type': 'string'},
            'example': {'type': 'integer', 'enum': [1, 2, 3, 4]},
            'case': {'type': ['integer', 'null'], 'enum': [1, 2, None]},
            'order': {'type': 'integer', 'enum': [2, 4, 6]},
            'm': {'type': 'integer', 'minimum': 5},
            'nx': {'type': 'array', 'items': {'type': 'integer', 'minimum': 4}, 'minItems': 1},
            'n_gamma': {'type': ['integer', 'null'], 'minimum': 1},
            'solution': {'type': 'string', 'enum': list(MANUFACTURED_SOLUTIONS)},
            'interface': {
                'type': 'object',
                'required': ['kind'],
                'properties': {'kind': {'type': 'string', 'enum': [kind.value for kind in CurveKind]}},
            },
            'geometry': {
                'type': 'object',
                'additionalProperties': False,
                'properties': {'domain': bounds, 'fluid_region': bounds, 'porous_region': bounds},
            },
            'coefficients': {
                'type': 'object',
                'required': ['nu', 'kappa', 'g', 'beta_bjs'],
                'additionalProperties': False,
                'properties': {'nu': positive, 'kappa': positive, 'g': number, 'beta_bjs': number},
            },
            'motion': {
                'type': ['object', 'null'],
                'required': ['start', 'end', 't_final', 'n_steps'],
                'additionalProperties': False,
                'properties': {
                    'start': point,
                    'end': point,
                    't_final': positive,
                    'n_steps': {'type': 'integer', 'minimum': 1},
                },
            },
            'porous_boundary': {'type': 'string', 'enum': [value.value for value in PorousBoundary]},
            'divergence_augmented_pressure': {'type': 'boolean'},
            'jitter': {'type': 'number', 'minimum': 0, 'maximum': 0.45},
            'seed': {'type': 'integer'},
            'timing': {'type': 'boolean'},
            'workers': {'type': 'integer', 'minimum': 1},
        },
    }


@dataclasses.dataclass(frozen=True)
class ExperimentConfig(ProtocolMixin):
    """Fully resolved inputs of an experiment."""

    inputs: Dict[str, Any]

    @classmethod
    def get_protocol_filepath(cls):
        """Return ``pathlib.Path`` to the ``.yaml`` file that defines the protocols."""
        from importlib_resources import files

        from . import protocols
        return files(protocols) / 'experiments.yaml'

    @classmethod
    def from_protocol(cls, protocol: Optional[str] = None, overrides: Optional[dict] = None) -> 'ExperimentConfig':
        """Return the configuration of a protocol with optional overrides.

        :raises ValueError: if the resolved inputs are invalid
        """
        return cls.from_inputs(cls.get_protocol_inputs(protocol, overrides))

    @classmethod
    def from_inputs(cls, inputs: dict) -> 'ExperimentConfig':
        """Validate resolved inputs and fill in the star size of the selected order.

        :raises ValueError: if the inputs are invalid
        """
        inputs = copy.deepcopy(inputs)
        default_m = inputs.pop('default_m', {}) or {}

        if inputs.get('m') is None and inputs.get('order') in default_m:
            inputs['m'] = default_m[inputs['order']]

        if isinstance(inputs.get('nx'), int):
            inputs['nx'] = [inputs['nx']]

        try:
            jsonschema.validate(inputs, get_config_schema())
        except jsonschema.ValidationError as exception:
            raise ValueError(f'invalid experiment configuration: {exception.message}') from exception

        closed = CurveKind(inputs['interface']['kind']).is_closed
        example = inputs['example']

        if closed != (example in (3, 4)):
            raise ValueError(f'example {example} does not support the `{inputs["interface"]["kind"]}` interface')

        if example == 4:
            if inputs['interface']['kind'] not in MOVING_INTERFACES:
                raise ValueError(f'example 4 requires one of the interfaces {", ".join(MOVING_INTERFACES)}')
            if not inputs.get('motion'):
                raise ValueError('example 4 requires a motion')

        geometry = inputs['geometry']
        required = ('domain',) if closed else ('fluid_region', 'porous_region')
        if any(key not in geometry for key in required):
            raise ValueError(f'the geometry of example {example} requires {", ".join(required)}')

        return cls(inputs)

    def __getattr__(self, name):
        try:
            return self.__dict__['inputs'][name]
        except KeyError as exception:
            raise AttributeError(name) from exception

    def replace(self, **overrides) -> 'ExperimentConfig':
        """Return a validated copy with some top level inputs or coefficients replaced."""
        inputs = copy.deepcopy(self.inputs)
        for key, value in overrides.items():
            if key in inputs['coefficients']:
                inputs['coefficients'][key] = value
            else:
                inputs[key] = value
        return type(self).from_inputs(inputs)

    @property
    def interface_kind(self) -> str:
        return self.inputs['interface']['kind']

    @property
    def domain(self) -> Rectangle:
        geometry = self.inputs['geometry']
        if 'domain' in geometry:
            return Rectangle.from_bounds(geometry['domain'])
        fluid_region = Rectangle.from_bounds(geometry['fluid_region'])
        return fluid_region.bounding(Rectangle.from_bounds(geometry['porous_region']))

    def regions(self) -> Tuple[Rectangle, Optional[Rectangle]]:
        """Return the fluid and porous rectangles, the global rectangle and ``None`` for closed interfaces."""
        geometry = self.inputs['geometry']
        if 'domain' in geometry:
            return Rectangle.from_bounds(geometry['domain']), None
        return Rectangle.from_bounds(geometry['fluid_region']), Rectangle.from_bounds(geometry['porous_region'])

    def curve(self) -> InterfaceCurve:
        """Return the interface at its initial position."""
        parameters = {key: value for key, value in self.inputs['interface'].items() if key != 'kind'}
        if self.inputs.get('motion'):
            parameters['center'] = self.inputs['motion']['start']
        return build_curve(self.interface_kind, **parameters)

    def motion(self) -> Optional[MotionSpec]:
        motion = self.inputs.get('motion')
        if not motion:
            return None
        path = LinearPath(start=tuple(motion['start']), end=tuple(motion['end']), t_final=motion['t_final'])
        return MotionSpec(path=path, t_final=motion['t_final'], n_steps=motion['n_steps'], domain=self.domain)

    def problem(self) -> ProblemSpec:
        return get_manufactured_solution(
            self.inputs['solution'], **self.inputs['coefficients'], length_scale=self.domain.width
        )


@dataclasses.dataclass(frozen=True)
class ExperimentResult:
    """Errors and artifacts of a single solve."""

    example: int
    case: Optional[int]
    interface: str
    order: int
    m: int
    nx: int
    t: Optional[float]
    report: ErrorReport
    sweep: Optional[Tuple[str, float]] = None
    system: Optional[CoupledSystem] = dataclasses.field(default=None, compare=False, repr=False)
    solution: Optional[SolutionField] = dataclasses.field(default=None, compare=False, repr=False)
    problem: Optional[ProblemSpec] = dataclasses.field(default=None, compare=False, repr=False)

    @property
    def tag(self) -> str:
        """Return a file name friendly identifier of the solve."""
        parts = [f'ex{self.example}']
        if self.case is not None:
            parts.append(f'case{self.case}')
        parts.extend([self.interface, f'o{self.order}', f'm{self.m}', f'nx{self.nx}'])
        if self.t is not None:
            parts.append(f't{self.t:.4f}')
        if self.sweep is not None:
            parts.append(f'{self.sweep[0]}{self.sweep[1]:g}')
        return '_'.join(parts)

    def group(self) -> tuple:
        """Return the key shared by the solves of one convergence study."""
        return (self.example, self.case, self.interface, self.order, self.m, self.t, self.sweep)


@dataclasses.dataclass(frozen=True)
class OrderFit:
    """Fitted and pairwise convergence orders of one norm of one field over a convergence study."""

    result: ExperimentResult
    field: str
    norm: str
    relative: bool
    nx_values: Tuple[int, ...]
    fitted: float
    pairwise: Tuple[float, ...]


@dataclasses.dataclass
class SweepResult:
    """Results of a sweep together with the grid points that failed.

    Every failure is recorded as its label, the error message and the exit status of the error.
    """

    results: List[ExperimentResult]
    failures: List[Tuple[str, str, int]] = dataclasses.field(default_factory=list)
    orders: List[OrderFit] = dataclasses.field(default_factory=list)


def _flux_stencils(config: 'ExperimentConfig', cloud: NodeSet) -> Optional[StencilSet]:
    """Return higher order stencils of the porous boundary nodes that carry flux rows, if the boundary is Neumann."""
    if PorousBoundary(config.porous_boundary) is not PorousBoundary.NEUMANN:
        return None

    order = min(config.order + FLUX_ORDER_INCREMENT, max(SUPPORTED_ORDERS))
    m = max(config.m, FLUX_STAR_SIZES[order])
    return build_stencils(cloud, order, m, nodes=cloud.indices(Side.POROUS, NodeKind.BOUNDARY))


def _solve_point(config: ExperimentConfig, problem: ProblemSpec, curve: InterfaceCurve, nx: int, t, sweep_point):
    """Run one static solve and measure its errors."""
    fluid_region, porous_region = config.regions()
    start = time.process_time()

    cloud = generate_cloud(
        fluid_region, porous_region, curve, nx, config.n_gamma, jitter=config.jitter, seed=config.seed
    )
    stencils = build_stencils(cloud, config.order, config.m)
    system = assemble(
        cloud,
        stencils,
        problem,
        porous_boundary=PorousBoundary(config.porous_boundary),
        divergence_augmented_pressure=config.divergence_augmented_pressure,
        flux_stencils=_flux_stencils(config, cloud),
    )
    solution = solve(system)
    report = error_norms(solution, problem, cloud, stencils)
    cpu_seconds = time.process_time() - start if config.timing else 0.
    report = dataclasses.replace(report, cpu_seconds=cpu_seconds)

    result = ExperimentResult(
        example=config.example,
        case=config.case,
        interface=config.interface_kind,
        order=config.order,
        m=config.m,
        nx=nx,
        t=t,
        report=report,
        sweep=sweep_point,
        system=system,
        solution=solution,
        problem=problem,
    )
    LOGGER.info(f'{result.tag}: {report.node_count} nodes, L2 relative error of u_f {report["u_f"].relative["L2"]:.3e}')

    return result


def run_example(config: ExperimentConfig, sweep_point: Optional[Tuple[str, float]] = None) -> List[ExperimentResult]:
    """Run an experiment for every resolution of the configuration and, for a moving interface, every time slice.

    The manufactured solution is verified against its finite difference oracle before any solve. Solves run on a pool
    of ``workers`` threads; results keep the order of the resolutions and time slices.

    :raises ManufacturedInconsistencyError: if the forcings disagree with the exact fields
    :raises StokesDarcyError: from any of the solves, with the resolution and time in the message
    """
    problem = config.problem()
    domain = config.domain
    check_manufactured_consistency(problem, (domain.x_min, domain.x_max, domain.y_min, domain.y_max), seed=config.seed)

    curve = config.curve()
    motion = config.motion()

    if motion is None:
        slices = [(None, curve)]
    else:
        slices = [(motion.time(j), interface_at_time(curve, motion, j)) for j in range(1, motion.n_steps + 2)]

    jobs = list(itertools.product(config.nx, slices))

    def run(job):
        nx, (t, moved) = job
        try:
            return _solve_point(config, problem, moved, nx, t, sweep_point)
        except StokesDarcyError as exception:
            context = f'example {config.example} with nx = {nx}' + (f' at t = {t:.6g}' if t is not None else '')
            raise type(exception)(f'{context}: {exception}') from exception

    if config.workers > 1 and len(jobs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=config.workers) as executor:
            return list(executor.map(run, jobs))

    return [run(job) for job in jobs]


def fit_orders(results: Sequence[ExperimentResult]) -> List[OrderFit]:
    """Return the convergence orders of every field and norm for each group of solves that differ only in ``nx``.

    Groups with fewer than two resolutions are skipped, as are norms whose errors are not all strictly positive.
    """
    groups: Dict[tuple, List[ExperimentResult]] = {}
    for result in results:
        groups.setdefault(result.group(), []).append(result)

    fits = []

    for members in groups.values():
        members = sorted(members, key=lambda result: result.nx)
        nx_values = tuple(result.nx for result in members)

        if len(set(nx_values)) < 2 or len(set(nx_values)) != len(nx_values):
            continue

        for field, norm, relative in itertools.product(REPORTED_FIELDS, NORMS, (False, True)):
            errors = [
                (result.report[field].relative if relative else result.report[field].absolute)[norm]
                for result in members
            ]
            try:
                fitted = convergence_order(errors, nx_values)
                pairwise = tuple(pairwise_orders(errors, nx_values))
            except NonPositiveError:
                LOGGER.debug(f'skipping the order of {field} {norm}: errors are not strictly positive')
                continue
            fits.append(OrderFit(members[0], field, norm, relative, nx_values, fitted, pairwise))

    return fits


def sweep(config: ExperimentConfig, parameter: str, values: Sequence) -> SweepResult:
    """Run an experiment for every value of one parameter.

    A sweep over ``nx`` runs a single convergence study over the values. Any other parameter replaces the value of the
    configuration for each grid point, keeping the configured resolutions. Failures of individual grid points are logged
    and recorded, the remaining points still run. Convergence orders are fitted wherever a grid point holds at least two
    resolutions.

    :raises ValueError: for an unknown parameter or an empty grid
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ValueError(f'cannot sweep `{parameter}`, choose from {", ".join(SWEEP_PARAMETERS)}')

    if len(values) == 0:
        raise ValueError('the sweep grid is empty')

    if parameter == 'nx':
        points = [(None, config.replace(nx=sorted(int(value) for value in values)))]
    else:
        cast = int if parameter == 'm' else float
        points = [((parameter, cast(value)), config.replace(**{parameter: cast(value)})) for value in values]

    outcome = SweepResult(results=[])

    for point, point_config in points:
        label = f'{point[0]} = {point[1]:g}' if point else f'nx = {point_config.nx}'
        try:
            outcome.results.extend(run_example(point_config, sweep_point=point))
        except StokesDarcyError as exception:
            LOGGER.warning(f'sweep point {label} failed: {exception}')
            outcome.failures.append((label, str(exception), exception.exit_status))

    outcome.orders.extend(fit_orders(outcome.results))

    return outcome