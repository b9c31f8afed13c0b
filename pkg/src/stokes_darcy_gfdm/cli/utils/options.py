# -*- coding: utf-8 -*-
"""Pre-defined overridable options for commonly used command line interface parameters.

Every option is a partial of :func:`click.option`, so keyword arguments passed when decorating a command override the
defaults defined here, e.g. ``@options.NX(default='32')``.
"""
import functools
import pathlib

import click

from ...common.types import CurveKind, PorousBoundary
from ...harness.experiment import SWEEP_PARAMETERS
from ...utils.mapping import LOG_LEVELS
from . import validate

VERBOSITY = functools.partial(
    click.option,
    '-v',
    '--verbosity',
    type=click.Choice([level for level in LOG_LEVELS if level != 'critical'], case_sensitive=False),
    default='info',
    show_default=True,
    help='Set the verbosity of the log messages of the solver.'
)

CONFIG = functools.partial(
    click.option,
    '--config',
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
    is_eager=True,
    expose_value=False,
    callback=validate.validate_config_file,
    help='File with `key=value` lines that set the defaults of the other options; explicit options take precedence.'
)

EXAMPLE = functools.partial(
    click.option,
    '-e',
    '--example',
    type=click.IntRange(1, 4),
    help='Select the example, which determines the geometry and the default settings. [default: 1]'
)

CASE = functools.partial(
    click.option,
    '--case',
    type=click.IntRange(1, 2),
    help='Select the geometry of example 1: a thin fluid layer (1) or two unit squares (2). [default: 1]'
)

ORDER = functools.partial(
    click.option,
    '-o',
    '--order',
    type=click.INT,
    callback=validate.validate_order,
    help='The truncation order of the derivative stencils: 2, 4 or 6.'
)

STAR_SIZE = functools.partial(
    click.option,
    '-m',
    '--m',
    'm',
    type=click.IntRange(min=5),
    help='The number of neighbours of each star, by default the value of the protocol for the selected order.'
)

NX = functools.partial(
    click.option,
    '-n',
    '--nx',
    type=click.STRING,
    callback=validate.validate_nx,
    help='Comma separated list of the number of intervals along the width of the domain, e.g. `16,32,64`.'
)

INTERFACE = functools.partial(
    click.option,
    '-i',
    '--interface',
    type=click.Choice([kind.value for kind in CurveKind]),
    help='The kind of interface curve.'
)

NT = functools.partial(
    click.option,
    '--nt',
    type=click.IntRange(min=1),
    help='The number of time steps of a moving interface.'
)

T_FINAL = functools.partial(
    click.option,
    '--t-final',
    type=click.FloatRange(min=0, min_open=True),
    help='The final time of a moving interface.'
)

NU = functools.partial(
    click.option, '--nu', type=click.FloatRange(min=0, min_open=True), help='The kinematic viscosity of the fluid.'
)

KAPPA = functools.partial(
    click.option,
    '--kappa',
    type=click.FloatRange(min=0, min_open=True),
    help='The hydraulic conductivity of the porous medium.'
)

GRAVITY = functools.partial(click.option, '--g', 'g', type=click.FLOAT, help='The gravitational acceleration.')

BETA_BJS = functools.partial(
    click.option, '--beta-bjs', type=click.FLOAT, help='The friction coefficient of the interface slip condition.'
)

OUT = functools.partial(
    click.option,
    '--out',
    type=click.Path(file_okay=False, path_type=pathlib.Path),
    default='results',
    show_default=True,
    help='The directory where the reports are written.'
)

SEED = functools.partial(click.option, '--seed', type=click.INT, help='Seed of the random number generators.')

JITTER = functools.partial(
    click.option,
    '--jitter',
    type=click.FloatRange(0, 0.45),
    help='Random displacement of the interior nodes as a fraction of the node spacing.'
)

POROUS_BOUNDARY = functools.partial(
    click.option,
    '--porous-boundary',
    type=click.Choice([value.value for value in PorousBoundary]),
    help='The condition imposed on the outer boundary of the porous region.'
)

DIVERGENCE_AUGMENTED_PRESSURE = functools.partial(
    click.option,
    '--divergence-augmented-pressure',
    is_flag=True,
    default=False,
    help='Add the velocity divergence to the pressure Poisson rows of the interior fluid nodes.'
)

NO_TIMING = functools.partial(
    click.option,
    '--no-timing',
    is_flag=True,
    default=False,
    help='Write zero CPU times, which makes the reports of identical runs identical.'
)

WORKERS = functools.partial(
    click.option,
    '--workers',
    type=click.IntRange(min=1),
    help='The number of threads that solve independent resolutions and time slices.'
)

DUMP_FIELDS = functools.partial(
    click.option, '--dump-fields', is_flag=True, default=False, help='Write the numerical and exact nodal fields.'
)

DUMP_MATRIX = functools.partial(
    click.option,
    '--dump-matrix',
    is_flag=True,
    default=False,
    help='Write the coupled matrix in coordinate format and its right-hand side.'
)

DUMP_STENCILS = functools.partial(
    click.option, '--dump-stencils', is_flag=True, default=False, help='Write the coefficients of all stencils.'
)

PARAMETER = functools.partial(
    click.option,
    '-p',
    '--parameter',
    type=click.Choice(SWEEP_PARAMETERS),
    required=True,
    help='The parameter to sweep.'
)

VALUES = functools.partial(
    click.option,
    '--values',
    type=click.STRING,
    required=True,
    callback=validate.validate_values,
    help='Comma separated list of the values of the swept parameter, e.g. `1,1e-2,1e-4`.'
)
