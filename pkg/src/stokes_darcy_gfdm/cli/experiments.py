# -*- coding: utf-8 -*-
"""Commands to run experiments, convergence studies and parameter sweeps."""
import click

from . import cmd_root
from ..harness.experiment import fit_orders, run_example, sweep
from ..harness.reports import emit_reports
from .utils import display, launch, options

EXPERIMENT_OPTIONS = (
    options.CONFIG,
    options.EXAMPLE,
    options.CASE,
    options.ORDER,
    options.STAR_SIZE,
    options.NX,
    options.INTERFACE,
    options.NT,
    options.T_FINAL,
    options.NU,
    options.KAPPA,
    options.GRAVITY,
    options.BETA_BJS,
    options.SEED,
    options.JITTER,
    options.POROUS_BOUNDARY,
    options.DIVERGENCE_AUGMENTED_PRESSURE,
    options.NO_TIMING,
    options.WORKERS,
    options.OUT,
)


def experiment_options(command):
    """Decorate a command with the options that configure an experiment."""
    for option in reversed(EXPERIMENT_OPTIONS):
        command = option()(command)
    return command


@cmd_root.command('run')
@experiment_options
@options.DUMP_FIELDS()
@options.DUMP_MATRIX()
@options.DUMP_STENCILS()
def cmd_run(out, dump_fields, dump_matrix, dump_stencils, **kwargs):
    """Solve an example for every resolution and write the errors to `errors.csv`."""
    config = launch.get_config(**kwargs)
    results = launch.launch_experiment(run_example, config)

    display.echo_results(results)

    written = launch.launch_experiment(
        emit_reports,
        results,
        out,
        config=config.inputs,
        dump_fields=dump_fields,
        dump_matrix=dump_matrix,
        dump_stencils=dump_stencils,
    )
    display.echo_written(written)


@cmd_root.command('convergence')
@experiment_options
def cmd_convergence(out, **kwargs):
    """Run a convergence study over the resolutions and fit the convergence orders.

    Writes `errors.csv` with the fitted orders appended and `orders.csv` with the fitted and pairwise orders.
    """
    config = launch.get_config(**kwargs)

    if len(config.nx) < 2:
        raise click.BadParameter('a convergence study needs at least two resolutions', param_hint="'--nx'")

    results = launch.launch_experiment(run_example, config)
    orders = fit_orders(results)

    display.echo_results(results)
    display.echo_orders(orders)

    written = launch.launch_experiment(emit_reports, results, out, config=config.inputs, orders=orders)
    display.echo_written(written)


@cmd_root.command('sweep')
@experiment_options
@options.PARAMETER()
@options.VALUES()
def cmd_sweep(out, parameter, values, **kwargs):
    """Run an example for every value of one parameter.

    Grid points that fail are reported and skipped. The command fails only if no grid point succeeds.
    """
    config = launch.get_config(**kwargs)
    outcome = launch.launch_experiment(sweep, config, parameter, values)

    display.echo_results(outcome.results)
    display.echo_orders(outcome.orders)

    written = launch.launch_experiment(
        emit_reports,
        outcome.results,
        out,
        config=config.inputs,
        orders=outcome.orders,
        failures=outcome.failures,
    )
    display.echo_written(written)

    for label, message, _ in outcome.failures:
        display.echo_critical(f'{label}: {message}')

    if not outcome.results:
        click.get_current_context().exit(max(status for _, _, status in outcome.failures))
