# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name
"""Fixtures for the command line interface."""
import pytest


@pytest.fixture
def run_cli_command():
    """Run a `click` command with the given options.

    The call will raise if the command triggered an exception or the exit code returned is non-zero, unless an exit code
    is expected.
    """

    def _run_cli_command(command, options=None, exit_code=0):
        """Run the command and check the result.

        :param command: the command to invoke
        :param options: the list of command line options to pass to the command invocation
        :param exit_code: the expected exit code
        """
        import traceback

        from click.testing import CliRunner

        runner = CliRunner()
        result = runner.invoke(command, [str(option) for option in options or []])

        if exit_code:
            assert result.exit_code == exit_code, result.output
            assert isinstance(result.exception, SystemExit), result.output
        else:
            assert result.exception is None, ''.join(traceback.format_exception(*result.exc_info))
            assert result.exit_code == 0, result.output

        result.output_lines = [line.strip() for line in result.output.split('\n') if line.strip()]

        return result

    return _run_cli_command


@pytest.fixture
def singular_solver(monkeypatch):
    """Make every coupled solve of the experiment harness fail with a singular system."""
    from stokes_darcy_gfdm.common.exceptions import SingularSystemError
    from stokes_darcy_gfdm.harness import experiment

    def _solve(system, *_, **__):
        raise SingularSystemError(f'factorization of the system of {system.size} unknowns broke down')

    monkeypatch.setattr(experiment, 'solve', _solve)
