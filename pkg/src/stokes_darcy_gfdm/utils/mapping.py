# -*- coding: utf-8 -*-
"""Utilities to deal with various mapping data structures."""
import collections.abc
import logging
from typing import Iterable, List, Mapping, Optional, Union

LOG_LEVELS = ('debug', 'info', 'warning', 'error', 'critical')


def get_logging_container() -> dict:
    """Return a dictionary that can be used to map logging messages to certain log levels.

    This datastructure is useful to add log messages in a function that does not have access to the right logger. Once
    returned, the caller who does have access to the logger can then easily loop over the contents and pipe the messages
    through the actual logger with :func:`emit_logs`.

    :return: dictionary with an empty list for each log level
    """
    return {level: [] for level in LOG_LEVELS}


def emit_logs(
    logger: logging.Logger,
    logging_dictionaries: Union[Mapping[str, List[str]], Iterable[Mapping[str, List[str]]]],
    ignore: Optional[Iterable[str]] = None,
) -> None:
    """Emit the messages in one or multiple "log dictionaries" through the given logger.

    Each key of a log dictionary must correspond to a log level of the python logging module, e.g. `error` or `warning`
    and its values must be a list of string messages. Empty messages and messages listed in ``ignore`` are skipped.

    :param logger: the logger through which to emit the messages
    :param logging_dictionaries: log dictionaries
    :param ignore: list of log messages to ignore
    """
    ignore = set(ignore or [])

    if isinstance(logging_dictionaries, collections.abc.Mapping):
        logging_dictionaries = [logging_dictionaries]

    for logs in logging_dictionaries:
        for level, messages in logs.items():
            if level not in LOG_LEVELS:
                continue
            for message in messages:

                if message is None:
                    continue

                stripped = message.strip()

                if not stripped or stripped in ignore:
                    continue

                getattr(logger, level)(stripped)


def recursive_merge(left: dict, right: dict) -> dict:
    """Recursively merge two dictionaries into a single dictionary.

    If any key is present in both ``left`` and ``right`` dictionaries, the value from the ``right`` dictionary is
    assigned to the key.

    :param left: first dictionary
    :param right: second dictionary
    :return: the recursively merged dictionary
    """
    # Note that a deepcopy is not necessary, since this function is called recusively.
    right = right.copy()

    for key, value in left.items():
        if key in right:
            if isinstance(value, collections.abc.Mapping) and isinstance(right[key], collections.abc.Mapping):
                right[key] = recursive_merge(value, right[key])

    merged = left.copy()
    merged.update(right)

    return merged
