# -*- coding: utf-8 -*-
"""Utilities to convert python values to the text formats written by the harness."""
import enum
import math
import numbers

import numpy


def format_value(val) -> str:
    """Convert a python value to the string written in a CSV cell.

    Floats use a fixed scientific format so that identical runs produce identical files; ``None`` and NaN become an
    empty cell.

    :param val: the value to be converted
    :returns: the string representation
    :raises ValueError: for unsupported types
    """
    # Note that bool should come before integer, because a boolean matches also isinstance(..., int)
    if val is None:
        return ''
    if isinstance(val, enum.Enum):
        return str(val.value)
    if isinstance(val, (bool, numpy.bool_)):
        return 'true' if val else 'false'
    if isinstance(val, numbers.Integral):
        return f'{val:d}'
    if isinstance(val, numbers.Real):
        if math.isnan(val):
            return ''
        return f'{val:.8e}'
    if isinstance(val, str):
        return val

    raise ValueError(
        f"Invalid value '{val}' of type '{type(val)}' passed, accepts only bools, ints, floats and strings"
    )


def parse_number_list(value: str, cast=float) -> list:
    """Parse a comma separated list of numbers such as ``16,32,64`` or ``1,1e-2,1e-4``.

    :param value: the string to parse
    :param cast: callable applied to every entry
    :returns: list of converted entries
    :raises ValueError: if the string is empty or an entry cannot be converted
    """
    entries = [entry.strip() for entry in str(value).split(',') if entry.strip()]

    if not entries:
        raise ValueError('expected a non-empty comma separated list')

    if cast is int:
        values = [float(entry) for entry in entries]
        if any(not number.is_integer() for number in values):
            raise ValueError(f'expected integers, got `{value}`')
        return [int(number) for number in values]

    return [cast(entry) for entry in entries]
