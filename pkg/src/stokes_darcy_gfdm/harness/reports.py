# -*- coding: utf-8 -*-
"""CSV reports, field dumps and the manifest of an experiment."""
import csv
import json
import logging
import pathlib
from typing import List, Optional, Sequence, Union

import numpy

from .. import __version__
from ..assembly.coupled import write_system
from ..common.types import Field
from ..stencil.coefficients import write_stencils_csv
from ..utils.convert import format_value
from .experiment import ExperimentResult, OrderFit

__all__ = ('ERRORS_COLUMNS', 'ORDERS_COLUMNS', 'FIELD_COLUMNS', 'emit_reports', 'error_rows', 'order_rows')

LOGGER = logging.getLogger(__name__)

ERRORS_COLUMNS = (
    'example', 'case', 'interface', 'order', 'm', 'nx', 't', 'field', 'Linf', 'L2', 'H1', 'L2rel', 'H1rel', 'cpu_s'
)

ORDERS_COLUMNS = (
    'example', 'case', 'interface', 'order', 'm', 't', 'field', 'norm', 'relative', 'nx_values', 'fitted', 'pairwise'
)

FIELD_COLUMNS = (
    'x', 'y', 'side', 'kind', 'u1', 'u2', 'p', 'phi', 'up1', 'up2', 'u1_exact', 'u2_exact', 'p_exact', 'phi_exact',
    'up1_exact', 'up2_exact'
)

SWEEP_COLUMNS = ('sweep_parameter', 'sweep_value')


def _prefix(result: ExperimentResult) -> list:
    # Examples with a single case report case 1.
    case = 1 if result.case is None else result.case
    return [result.example, case, result.interface, result.order, result.m]


def _time(result: ExperimentResult) -> float:
    """Return the time of a solve, 0 for a static interface."""
    return 0. if result.t is None else result.t


def error_rows(results: Sequence[ExperimentResult], orders: Sequence[OrderFit] = ()) -> List[list]:
    """Return the rows of ``errors.csv``, one per solve and field, followed by the fitted orders.

    Order rows carry ``order`` in the ``nx`` column and the fitted order of each norm in the norm columns.
    """
    sweep = any(result.sweep is not None for result in results)
    rows = []

    for result in results:
        for name, errors in result.report.fields.items():
            row = _prefix(result) + [
                result.nx, _time(result), name, errors.absolute['Linf'], errors.absolute['L2'], errors.absolute['H1'],
                errors.relative['L2'], errors.relative['H1'], result.report.cpu_seconds
            ]
            if sweep:
                row += list(result.sweep or (None, None))
            rows.append(row)

    fitted = {}
    for fit in orders:
        key = (id(fit.result), fit.field)
        fitted.setdefault(key, (fit.result, {}))[1][(fit.norm, fit.relative)] = fit.fitted

    for (_, name), (result, values) in fitted.items():
        row = _prefix(result) + [
            'order', _time(result), name, values.get(('Linf', False)), values.get(('L2', False)),
            values.get(('H1', False)), values.get(('L2', True)), values.get(('H1', True)), None
        ]
        if sweep:
            row += list(result.sweep or (None, None))
        rows.append(row)

    return rows


def order_rows(orders: Sequence[OrderFit]) -> List[list]:
    """Return the rows of ``orders.csv``, one per field, norm and kind of error."""
    rows = []
    for fit in orders:
        rows.append(
            _prefix(fit.result) + [
                _time(fit.result), fit.field, fit.norm, fit.relative, ' '.join(str(nx) for nx in fit.nx_values),
                fit.fitted,
                ' '.join(format_value(order) for order in fit.pairwise)
            ]
        )
    return rows


def _write_csv(filepath: pathlib.Path, header: Sequence[str], rows: Sequence[Sequence]) -> pathlib.Path:
    with filepath.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
    return filepath


def write_field_csv(result: ExperimentResult, filepath: pathlib.Path) -> pathlib.Path:
    """Write the numerical and exact nodal fields of one solve."""
    solution, problem = result.solution, result.problem
    cloud = solution.cloud
    positions = cloud.positions
    exact = {field: numpy.full(len(cloud), numpy.nan) for field in Field}
    exact_darcy = numpy.full((len(cloud), 2), numpy.nan)

    for field in Field:
        nodes = result.system.unknowns.nodal_slice(field)
        exact[field][nodes] = problem.exact(field, positions[nodes])

    porous = result.system.unknowns.nodal_slice(Field.PHI)
    exact_darcy[porous] = problem.darcy_velocity(positions[porous])

    rows = []
    for index in range(len(cloud)):
        rows.append([
            positions[index, 0],
            positions[index, 1],
            cloud.sides[index],
            cloud.kinds[index],
            *(solution[field][index] for field in Field),
            *solution.darcy_velocity[index],
            *(exact[field][index] for field in Field),
            *exact_darcy[index],
        ])

    return _write_csv(filepath, FIELD_COLUMNS, rows)


def emit_reports(
    results: Sequence[ExperimentResult],
    directory: Union[str, pathlib.Path],
    *,
    config: Optional[dict] = None,
    orders: Sequence[OrderFit] = (),
    failures: Sequence = (),
    dump_fields: bool = False,
    dump_matrix: bool = False,
    dump_stencils: bool = False,
) -> List[pathlib.Path]:
    """Write the reports of an experiment into a directory.

    Always writes ``errors.csv`` and ``manifest.json``; ``orders.csv`` when convergence orders were fitted. The optional
    dumps write one file per solve, named after the tag of the solve.

    :returns: the paths of the written files
    :raises OSError: if a file cannot be written, with the offending path in the message
    """
    directory = pathlib.Path(directory)
    written = []

    def guarded(filepath: pathlib.Path, writer, *args):
        try:
            written.append(writer(*args))
        except OSError as exception:
            raise OSError(f'failed to write `{filepath}`: {exception.strerror or exception}') from exception

    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exception:
        raise OSError(f'failed to create `{directory}`: {exception.strerror or exception}') from exception

    sweep = any(result.sweep is not None for result in results)
    header = ERRORS_COLUMNS + (SWEEP_COLUMNS if sweep else ())

    filepath = directory / 'errors.csv'
    guarded(filepath, _write_csv, filepath, header, error_rows(results, orders))

    if orders:
        filepath = directory / 'orders.csv'
        guarded(filepath, _write_csv, filepath, ORDERS_COLUMNS, order_rows(orders))

    for result in results:
        if dump_fields and result.solution is not None:
            filepath = directory / f'field_{result.tag}.csv'
            guarded(filepath, write_field_csv, result, filepath)
        if dump_stencils and result.system is not None:
            filepath = directory / f'stencils_{result.tag}.csv'
            guarded(filepath, write_stencils_csv, result.system.stencils, filepath)
        if dump_matrix and result.system is not None:
            try:
                written.extend(write_system(result.system, directory, prefix=result.tag))
            except OSError as exception:
                raise OSError(f'failed to write the system of `{result.tag}`: {exception}') from exception

    manifest = {
        'version': __version__,
        'config': config,
        'solves': [result.tag for result in results],
        'failures': [list(failure) for failure in failures],
        'files': sorted(path.name for path in written),
    }
    filepath = directory / 'manifest.json'
    guarded(filepath, _write_json, filepath, manifest)

    LOGGER.debug(f'wrote {len(written)} files to {directory}')

    return written


def _write_json(filepath: pathlib.Path, content: dict) -> pathlib.Path:
    with filepath.open('w', encoding='utf-8') as handle:
        json.dump(content, handle, indent=4, sort_keys=True)
        handle.write('\n')
    return filepath
