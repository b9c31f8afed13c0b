# -*- coding: utf-8 -*-
"""Utility functions for validation of command line interface parameter inputs."""
from typing import Optional

import click

from ...stencil.basis import SUPPORTED_ORDERS
from ...utils.convert import parse_number_list


def parse_config_lines(lines) -> dict:
    """Parse ``key=value`` lines into a dictionary.

    Blank lines and lines starting with ``#`` are skipped. Dashes in keys are converted to underscores, so both
    ``beta-bjs`` and ``beta_bjs`` name the ``--beta-bjs`` option.

    :raises ValueError: for a line without ``=`` or with an empty key
    """
    parsed = {}

    for number, line in enumerate(lines, start=1):
        stripped = line.strip()

        if not stripped or stripped.startswith('#'):
            continue

        key, separator, value = stripped.partition('=')
        key = key.strip().replace('-', '_')

        if not separator or not key:
            raise ValueError(f'line {number} is not of the form `key=value`: {stripped}')

        parsed[key] = value.strip()

    return parsed


def validate_config_file(ctx, param, value):
    """Command line option validator for a configuration file of ``key=value`` lines.

    The parsed values are loaded into the ``default_map`` of the context, so they act as defaults of the other options
    of the command and are converted by the same types and callbacks.

    :param ctx: internal context of the click.command
    :param param: the click Parameter, i.e. either the Option or Argument to which the validator is hooked up
    :param value: the path to the configuration file
    """
    if value is None:
        return None

    try:
        with value.open(encoding='utf-8') as handle:
            parsed = parse_config_lines(handle)
    except OSError as exception:
        raise click.BadParameter(f'failed to read `{value}`: {exception}', ctx=ctx, param=param) from exception
    except ValueError as exception:
        raise click.BadParameter(str(exception), ctx=ctx, param=param) from exception

    names = {option.name for option in ctx.command.params if option.name != param.name}
    unknown = sorted(set(parsed) - names)

    if unknown:
        raise click.BadParameter(f'unknown keys {", ".join(unknown)}', ctx=ctx, param=param)

    ctx.default_map = {**(ctx.default_map or {}), **parsed}

    return value


def validate_order(ctx, param, value) -> Optional[int]:
    """Command line option validator for the truncation order of the stencils."""
    # pylint: disable=unused-argument
    if value is None:
        return None

    if value not in SUPPORTED_ORDERS:
        raise click.BadParameter(f'the order should be one of {", ".join(map(str, SUPPORTED_ORDERS))}, got {value}')

    return value


def validate_nx(ctx, param, value) -> Optional[list]:
    """Command line option validator for a comma separated list of resolutions.

    :returns: the strictly increasing list of resolutions
    """
    # pylint: disable=unused-argument
    if value is None:
        return None

    try:
        values = parse_number_list(value, int)
    except ValueError as exception:
        raise click.BadParameter(str(exception)) from exception

    if any(nx < 4 for nx in values):
        raise click.BadParameter(f'every resolution should be at least 4, got `{value}`')

    if len(set(values)) != len(values):
        raise click.BadParameter(f'the resolutions should be distinct, got `{value}`')

    return sorted(values)


def validate_values(ctx, param, value) -> Optional[list]:
    """Command line option validator for the comma separated values of a sweep."""
    # pylint: disable=unused-argument
    if value is None:
        return None

    try:
        return parse_number_list(value, float)
    except ValueError as exception:
        raise click.BadParameter(str(exception)) from exception
