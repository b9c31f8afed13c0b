# -*- coding: utf-8 -*-
"""Registry of the manufactured solutions used by the experiments."""
from typing import Callable, Dict

import sympy as sp

from ..common.types import Field
from .manufactured import X, Y, ProblemSpec

__all__ = ('MANUFACTURED_SOLUTIONS', 'get_manufactured_solution', 'smooth_coupled_solution', 'polynomial_solution')


def smooth_coupled_solution(nu: float = 1., kappa: float = 1., g: float = 1., beta_bjs: float = 1., **kwargs):
    """Return the trigonometric-polynomial solution used with the linear and the closed interfaces.

    The velocity is divergence free and the head vanishes on ``y = 0``.
    """
    wave = 2 - sp.pi * sp.sin(sp.pi * X)
    fields = {
        Field.U1: X**2 * (Y - 1)**2 + Y,
        Field.U2: -sp.Rational(2, 3) * X * (Y - 1)**3 + wave,
        Field.P: wave * sp.sin(sp.pi * Y / 2),
        Field.PHI: wave * (1 - Y - sp.cos(sp.pi * Y)),
    }
    return ProblemSpec.from_expressions(
        fields, nu=nu, kappa=kappa, g=g, beta_bjs=beta_bjs, name='smooth_coupled', **kwargs
    )


def polynomial_solution(nu: float = 1., kappa: float = 1., g: float = 1., beta_bjs: float = 1., **kwargs):
    """Return the cubic solution with vanishing forcings, parametrized by the viscosity and the conductivity."""
    nu_, kappa_ = sp.nsimplify(nu), sp.nsimplify(kappa)
    fields = {
        Field.U1: (Y - 1)**2,
        Field.U2: X**2 - X,
        Field.P: 2 * nu_ * (X + Y - 1) + 1 / (3 * kappa_),
        Field.PHI: (X * (1 - X) * (Y - 1) + Y**3 / 3 - Y**2 + Y) / kappa_ + 2 * nu_ * X,
    }
    return ProblemSpec.from_expressions(fields, nu=nu, kappa=kappa, g=g, beta_bjs=beta_bjs, name='polynomial', **kwargs)


MANUFACTURED_SOLUTIONS: Dict[str, Callable[..., ProblemSpec]] = {
    'smooth_coupled': smooth_coupled_solution,
    'polynomial': polynomial_solution,
}


def get_manufactured_solution(name: str, **coefficients) -> ProblemSpec:
    """Return the registered manufactured solution with the given coefficients.

    :raises ValueError: for an unknown name
    """
    try:
        factory = MANUFACTURED_SOLUTIONS[name]
    except KeyError as exception:
        raise ValueError(
            f'unknown manufactured solution `{name}`, choose from {", ".join(MANUFACTURED_SOLUTIONS)}'
        ) from exception

    return factory(**coefficients)
