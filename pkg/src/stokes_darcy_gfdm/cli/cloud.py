# -*- coding: utf-8 -*-
"""Command to write the collocation nodes of an example."""
import click

from . import cmd_root
from ..pointcloud.cloud import generate_cloud, write_cloud_csv
from .utils import display, launch, options


def _write_clouds(config, out):
    fluid_region, porous_region = config.regions()
    curve = config.curve()
    written = []

    out.mkdir(parents=True, exist_ok=True)

    for nx in config.nx:
        cloud = generate_cloud(fluid_region, porous_region, curve, nx, config.n_gamma, jitter=config.jitter,
                               seed=config.seed)
        counts = ', '.join(f'{name} {count}' for name, count in cloud.counts().items())
        click.echo(f'nx = {nx}: {len(cloud)} nodes ({counts})')
        written.append(write_cloud_csv(cloud, out / f'cloud_ex{config.example}_{config.interface_kind}_nx{nx}.csv'))

    return written


@cmd_root.command('dump-cloud')
@options.CONFIG()
@options.EXAMPLE()
@options.CASE()
@options.NX()
@options.INTERFACE()
@options.SEED()
@options.JITTER()
@options.OUT()
def cmd_dump_cloud(out, **kwargs):
    """Write the nodes of an example, for every resolution, with their side, kind, normal and tangent.

    A moving interface is written at its initial position.
    """
    config = launch.get_config(**kwargs)
    written = launch.launch_experiment(_write_clouds, config, out)
    display.echo_written(written)
