# -*- coding: utf-8 -*-
"""Module with display utilities for the CLI."""
import logging
from typing import Sequence

import click

from ...norms import REPORTED_FIELDS

PACKAGE_LOGGER = 'stokes_darcy_gfdm'


class ClickHandler(logging.Handler):
    """Logging handler that writes records through ``click.echo``, warnings and errors to stderr."""

    def emit(self, record):
        try:
            click.echo(self.format(record), err=record.levelno >= logging.WARNING)
        except Exception:  # pylint: disable=broad-except
            self.handleError(record)


def configure_logging(verbosity: str):
    """Attach a single :class:`ClickHandler` to the package logger and set its level."""
    logger = logging.getLogger(PACKAGE_LOGGER)

    for handler in list(logger.handlers):
        if isinstance(handler, ClickHandler):
            logger.removeHandler(handler)

    handler = ClickHandler()
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(verbosity.upper())


def echo_critical(message: str):
    """Write an error message to stderr."""
    click.secho(f'Critical: {message}', fg='red', bold=True, err=True)


def echo_results(results):
    """Display a formatted table with the relative L2 errors of every solve."""
    if not results:
        click.echo('No solves completed.')
        return

    click.echo(f"\n{'Solve':48s} {'nodes':>7s} " + ' '.join(f'{field:>10s}' for field in REPORTED_FIELDS))
    click.echo(f"{'-' * (57 + 11 * len(REPORTED_FIELDS))}")

    for result in results:
        errors = ' '.join(f"{result.report[field].relative['L2']:10.3e}" for field in REPORTED_FIELDS)
        click.echo(f'{result.tag:48s} {result.report.node_count:7d} {errors}')


def echo_orders(orders):
    """Display the fitted orders of the absolute errors of every field and norm."""
    absolute = [fit for fit in orders if not fit.relative]

    if not absolute:
        click.echo('No convergence orders could be fitted.')
        return

    click.echo(f"\n{'Study':40s} {'field':6s} {'norm':5s} {'order':>7s}  pairwise")
    click.echo(f"{'-' * 80}")

    for fit in absolute:
        study = fit.result.tag.replace(f'_nx{fit.result.nx}', '')
        pairwise = ' '.join(f'{order:.2f}' for order in fit.pairwise)
        click.echo(f'{study:40s} {fit.field:6s} {fit.norm:5s} {fit.fitted:7.3f}  {pairwise}')


def echo_written(paths: Sequence):
    """List the files that were written."""
    for path in paths:
        click.echo(f'-> wrote {path}')
