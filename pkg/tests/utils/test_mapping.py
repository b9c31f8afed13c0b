# -*- coding: utf-8 -*-
"""Tests for :py:mod:`~stokes_darcy_gfdm.utils.mapping`."""
import logging

from stokes_darcy_gfdm.utils.mapping import emit_logs, get_logging_container, recursive_merge


def test_recursive_merge():
    """Test that nested mappings are merged and the right hand side wins."""
    left = {'order': 2, 'coefficients': {'nu': 1., 'kappa': 1.}, 'motion': {'n_steps': 10}}
    right = {'coefficients': {'nu': 0.5}, 'motion': None, 'seed': 3}

    merged = recursive_merge(left, right)

    assert merged == {'order': 2, 'coefficients': {'nu': 0.5, 'kappa': 1.}, 'motion': None, 'seed': 3}
    assert left['coefficients'] == {'nu': 1., 'kappa': 1.}


def test_emit_logs(caplog):
    """Test that messages are emitted at their level and empty or ignored messages are skipped."""
    logger = logging.getLogger('stokes_darcy_gfdm.tests')
    logs = get_logging_container()
    logs['warning'].extend(['star of node 3 is wide  ', '', None, 'ignored'])
    logs['debug'].append('built')
    logs['unknown'] = ['skipped']

    with caplog.at_level(logging.DEBUG, logger='stokes_darcy_gfdm.tests'):
        emit_logs(logger, [logs], ignore=['ignored'])

    assert [(record.levelname, record.getMessage()) for record in caplog.records] == [
        ('DEBUG', 'built'),
        ('WARNING', 'star of node 3 is wide'),
    ]
