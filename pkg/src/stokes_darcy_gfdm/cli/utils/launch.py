# -*- coding: utf-8 -*-
"""Module with launch utilities for the CLI."""
from typing import Optional

import click

from ...common.exceptions import EXIT_STATUS_IO, StokesDarcyError
from ...harness.experiment import ExperimentConfig
from .display import echo_critical

COEFFICIENTS = ('nu', 'kappa', 'g', 'beta_bjs')

TOP_LEVEL = ('order', 'm', 'nx', 'seed', 'jitter', 'porous_boundary', 'workers')


def get_protocol(example: Optional[int], case: Optional[int]) -> Optional[str]:
    """Return the protocol of an example and, for example 1, its geometry case.

    :raises click.BadParameter: if a case is given for an example other than 1
    """
    if example is None and case is None:
        return None

    if example in (None, 1):
        return f'example_1_case_{case or 1}'

    if case is not None:
        raise click.BadParameter('only example 1 has geometry cases', param_hint="'--case'")

    return f'example_{example}'


def get_config(example=None, case=None, interface=None, nt=None, t_final=None, no_timing=False, **kwargs):
    """Resolve the configuration of an experiment from the protocol of the example and the command line options.

    Options that were not given keep the value of the protocol.

    :raises click.UsageError: if the resolved configuration is invalid
    """
    protocol = get_protocol(example, case)
    overrides = {key: kwargs[key] for key in TOP_LEVEL if kwargs.get(key) is not None}
    coefficients = {key: kwargs[key] for key in COEFFICIENTS if kwargs.get(key) is not None}

    if coefficients:
        overrides['coefficients'] = coefficients

    if interface is not None:
        overrides['interface'] = {'kind': interface}

    if kwargs.get('divergence_augmented_pressure'):
        overrides['divergence_augmented_pressure'] = True

    if no_timing:
        overrides['timing'] = False

    motion = {key: value for key, value in (('n_steps', nt), ('t_final', t_final)) if value is not None}

    if motion:
        if ExperimentConfig.get_protocol_inputs(protocol).get('motion') is None:
            raise click.UsageError('--nt and --t-final only apply to an example with a moving interface')
        overrides['motion'] = motion

    try:
        return ExperimentConfig.from_protocol(protocol, overrides)
    except ValueError as exception:
        raise click.UsageError(str(exception)) from exception


def launch_experiment(function, *args, **kwargs):
    """Call a function of the harness and translate its exceptions into the exit status of the command.

    Solver errors exit with their own status, input/output errors with ``4``.
    """
    ctx = click.get_current_context()

    try:
        return function(*args, **kwargs)
    except StokesDarcyError as exception:
        echo_critical(str(exception))
        ctx.exit(exception.exit_status)
    except OSError as exception:
        echo_critical(str(exception))
        ctx.exit(EXIT_STATUS_IO)
    except ValueError as exception:
        raise click.UsageError(str(exception)) from exception
