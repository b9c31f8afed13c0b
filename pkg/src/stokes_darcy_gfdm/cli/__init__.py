# -*- coding: utf-8 -*-
# pylint: disable=wrong-import-position
"""Module for the command line interface."""
import click

from .utils import display, options


@click.group('stokes-darcy-gfdm', context_settings={'help_option_names': ['-h', '--help']})
@options.VERBOSITY()
def cmd_root(verbosity):
    """CLI for the meshless solver of the coupled Stokes-Darcy problem."""
    display.configure_logging(verbosity)


from .cloud import cmd_dump_cloud
from .experiments import cmd_convergence, cmd_run, cmd_sweep
