# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name
"""Fixtures for the experiment harness."""
import pytest


@pytest.fixture(scope='module')
def small_config():
    """Return the configuration of the two unit squares at low resolution without timing."""
    from stokes_darcy_gfdm.harness import ExperimentConfig
    return ExperimentConfig.from_protocol('example_1_case_2', {'nx': [8, 16], 'm': 20, 'timing': False})


@pytest.fixture(scope='module')
def small_results(small_config):
    """Return the results of the low resolution convergence study."""
    from stokes_darcy_gfdm.harness import run_example
    return run_example(small_config)


@pytest.fixture
def generate_result():
    """Return a factory of experiment results with errors ``constant / nx^rate`` in every field and norm."""

    def _generate_result(nx, rate=2., constant=1., m=20, sweep=None, zero_field=None):
        from stokes_darcy_gfdm.harness import ExperimentResult
        from stokes_darcy_gfdm.norms import NORMS, REPORTED_FIELDS, ErrorReport, FieldErrors

        fields = {}
        for field in REPORTED_FIELDS:
            value = 0. if field == zero_field else constant * nx**-rate
            errors = {norm: value for norm in NORMS}
            fields[field] = FieldErrors(field, 10, errors, {norm: 10 * value for norm in NORMS})

        report = ErrorReport(fields=fields, node_count=10 * nx)
        return ExperimentResult(
            example=1, case=2, interface='line_segment', order=2, m=m, nx=nx, t=None, report=report, sweep=sweep
        )

    return _generate_result
