# -*- coding: utf-8 -*-
"""Physical coefficients, exact fields and forcings of a manufactured Stokes-Darcy problem.

The fluid momentum equation is written as ``-div(2 nu D(u)) + grad p = f`` with ``D(u)`` the symmetric gradient, the
Darcy equation as ``-K laplace(phi) = f_p``. Exact fields are given as sympy expressions; their partial derivatives up
to second order and the forcings are derived symbolically and compiled to vectorized numpy callables.
"""
import dataclasses
import logging
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

import numpy
import sympy as sp

from ..common.exceptions import ManufacturedInconsistencyError
from ..common.types import Field

__all__ = ('ProblemSpec', 'divergence_of_forcing', 'check_manufactured_consistency', 'X', 'Y')

LOGGER = logging.getLogger(__name__)

X, Y = sp.symbols('x y', real=True)

#: Partial derivatives registered for every exact field.
PARTIALS = ((0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (1, 1))

#: Weights of the sixth order central difference of a first derivative over offsets ``1, 2, 3`` times the step.
CENTRAL_WEIGHTS = numpy.array([45., -9., 1.]) / 60.

FieldFunction = Callable[[numpy.ndarray, numpy.ndarray], numpy.ndarray]


def _compile(expression) -> FieldFunction:
    """Return a numpy callable of ``(x, y)`` that broadcasts constant expressions to the shape of its input."""
    function = sp.lambdify((X, Y), expression, modules='numpy')

    def evaluate(x, y):
        x = numpy.asarray(x, dtype=float)
        y = numpy.asarray(y, dtype=float)
        return numpy.broadcast_to(numpy.asarray(function(x, y), dtype=float), numpy.broadcast(x, y).shape).copy()

    return evaluate


@dataclasses.dataclass(frozen=True)
class ProblemSpec:
    """Coefficients, exact fields and forcings of a coupled problem.

    :param nu: kinematic viscosity
    :param kappa: scalar hydraulic conductivity ``K``
    :param g: coefficient of the head in the normal stress balance
    :param beta_bjs: combined Beavers-Joseph-Saffman friction coefficient
    :param partials: callables keyed on ``(field, (i, j))`` for the exact fields and their partials up to second order
    :param forcing: callables keyed on ``f1``, ``f2`` and ``fp``
    :param forcing_divergence: analytic ``df1/dx + df2/dy``, if known
    :param length_scale: size of the domain, sets the step of the finite difference fallbacks
    :param name: identifier of the problem
    """

    nu: float
    kappa: float
    g: float
    beta_bjs: float
    partials: Mapping[Tuple[Field, Tuple[int, int]], FieldFunction]
    forcing: Mapping[str, FieldFunction]
    forcing_divergence: Optional[FieldFunction] = None
    length_scale: float = 1.
    name: str = 'custom'
    expressions: Mapping[Field, object] = dataclasses.field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_expressions(
        cls,
        fields: Mapping[Union[Field, str], object],
        *,
        nu: float,
        kappa: float,
        g: float,
        beta_bjs: float,
        length_scale: float = 1.,
        name: str = 'custom',
    ) -> 'ProblemSpec':
        """Construct a problem from sympy expressions in ``X`` and ``Y`` of the four exact fields.

        The forcings follow from the governing equations applied to the exact fields.
        """
        expressions = {Field(key): sp.sympify(value) for key, value in fields.items()}
        missing = set(Field) - set(expressions)

        if missing:
            raise ValueError(f'missing exact fields: {", ".join(sorted(field.value for field in missing))}')

        u1, u2, p, phi = (expressions[field] for field in (Field.U1, Field.U2, Field.P, Field.PHI))

        f1 = -nu * (2 * sp.diff(u1, X, 2) + sp.diff(u1, Y, 2) + sp.diff(u2, X, Y)) + sp.diff(p, X)
        f2 = -nu * (sp.diff(u2, X, 2) + 2 * sp.diff(u2, Y, 2) + sp.diff(u1, X, Y)) + sp.diff(p, Y)
        fp = -kappa * (sp.diff(phi, X, 2) + sp.diff(phi, Y, 2))
        divergence = sp.diff(f1, X) + sp.diff(f2, Y)

        partials = {}
        for field, expression in expressions.items():
            for i, j in PARTIALS:
                derivative = expression
                if i:
                    derivative = sp.diff(derivative, X, i)
                if j:
                    derivative = sp.diff(derivative, Y, j)
                partials[(field, (i, j))] = _compile(derivative)

        return cls(
            nu=float(nu),
            kappa=float(kappa),
            g=float(g),
            beta_bjs=float(beta_bjs),
            partials=partials,
            forcing={'f1': _compile(f1), 'f2': _compile(f2), 'fp': _compile(fp)},
            forcing_divergence=_compile(divergence),
            length_scale=float(length_scale),
            name=name,
            expressions=expressions,
        )

    def exact(self, field: Field, points: numpy.ndarray, derivative: Tuple[int, int] = (0, 0)) -> numpy.ndarray:
        """Evaluate an exact field or one of its registered partial derivatives at an ``(n, 2)`` array of points.

        :raises KeyError: if the partial derivative is not registered
        """
        points = numpy.atleast_2d(points)
        return self.partials[(Field(field), tuple(derivative))](points[:, 0], points[:, 1])

    def gradient(self, field: Field, points: numpy.ndarray) -> numpy.ndarray:
        """Return the exact gradient of a field as an ``(n, 2)`` array."""
        return numpy.column_stack([self.exact(field, points, (1, 0)), self.exact(field, points, (0, 1))])

    def evaluate_forcing(self, name: str, points: numpy.ndarray) -> numpy.ndarray:
        points = numpy.atleast_2d(points)
        return self.forcing[name](points[:, 0], points[:, 1])

    def velocity_divergence(self, points: numpy.ndarray) -> numpy.ndarray:
        """Return the divergence of the exact fluid velocity."""
        return self.exact(Field.U1, points, (1, 0)) + self.exact(Field.U2, points, (0, 1))

    def darcy_velocity(self, points: numpy.ndarray) -> numpy.ndarray:
        """Return the exact Darcy velocity ``-K grad phi``."""
        return -self.kappa * self.gradient(Field.PHI, points)

    def coefficients(self) -> Dict[str, float]:
        return {'nu': self.nu, 'kappa': self.kappa, 'g': self.g, 'beta_bjs': self.beta_bjs}


def _central_difference(function: FieldFunction, points: numpy.ndarray, axis: int, step: float) -> numpy.ndarray:
    """Return the sixth order central difference of ``function`` along ``axis``."""
    result = numpy.zeros(len(points))
    for k, coefficient in enumerate(CENTRAL_WEIGHTS, start=1):
        shift = numpy.zeros(2)
        shift[axis] = k * step
        forward, backward = points + shift, points - shift
        result += coefficient * (function(forward[:, 0], forward[:, 1]) - function(backward[:, 0], backward[:, 1]))
    return result / step


def divergence_of_forcing(spec: ProblemSpec, points: numpy.ndarray) -> numpy.ndarray:
    """Return ``df1/dx + df2/dy`` at the points.

    The analytic divergence is used when the problem registers one, otherwise sixth order central differences with a
    step of ``1e-4`` times the domain size.
    """
    points = numpy.atleast_2d(numpy.asarray(points, dtype=float))

    if spec.forcing_divergence is not None:
        return spec.forcing_divergence(points[:, 0], points[:, 1])

    step = 1E-4 * spec.length_scale
    return (
        _central_difference(spec.forcing['f1'], points, 0, step) +
        _central_difference(spec.forcing['f2'], points, 1, step)
    )


def check_manufactured_consistency(
    spec: ProblemSpec,
    bounds: Tuple[float, float, float, float],
    count: int = 200,
    seed: int = 0,
    tolerance: float = 1E-9,
) -> None:
    """Verify the registered forcings against the governing equations applied to the exact fields.

    Second derivatives are obtained by sixth order central differences of the registered first partials at ``count``
    random points drawn from the rectangle ``bounds = (x_min, x_max, y_min, y_max)``. The divergence of the exact fluid
    velocity must vanish as well. A mismatch larger than ``tolerance * max(1, |reference|)`` raises.

    :raises ManufacturedInconsistencyError: naming the first inconsistent quantity
    """
    rng = numpy.random.default_rng(seed)
    x_min, x_max, y_min, y_max = bounds
    points = numpy.column_stack([rng.uniform(x_min, x_max, count), rng.uniform(y_min, y_max, count)])
    step = 1E-3 * spec.length_scale

    def second(field, first, axis):
        return _central_difference(spec.partials[(field, first)], points, axis, step)

    u1_xx, u1_yy, u1_xy = second(Field.U1, (1, 0), 0), second(Field.U1, (0, 1), 1), second(Field.U1, (1, 0), 1)
    u2_xx, u2_yy, u2_xy = second(Field.U2, (1, 0), 0), second(Field.U2, (0, 1), 1), second(Field.U2, (1, 0), 1)
    phi_xx, phi_yy = second(Field.PHI, (1, 0), 0), second(Field.PHI, (0, 1), 1)
    p_x, p_y = spec.exact(Field.P, points, (1, 0)), spec.exact(Field.P, points, (0, 1))

    references = {
        'f1': -spec.nu * (2 * u1_xx + u1_yy + u2_xy) + p_x,
        'f2': -spec.nu * (u2_xx + 2 * u2_yy + u1_xy) + p_y,
        'fp': -spec.kappa * (phi_xx + phi_yy),
    }

    for name, reference in references.items():
        _compare(f'forcing {name} of {spec.name}', spec.evaluate_forcing(name, points), reference, tolerance)

    _compare(f'divergence of the velocity of {spec.name}', spec.velocity_divergence(points), 0., tolerance)

    LOGGER.debug(f'manufactured problem {spec.name} is consistent at {count} sample points')


def _compare(what: str, value: numpy.ndarray, reference, tolerance: float):
    reference = numpy.broadcast_to(reference, numpy.shape(value))
    mismatch = numpy.abs(value - reference) - tolerance * numpy.maximum(1., numpy.abs(reference))
    if numpy.any(mismatch > 0):
        worst = int(numpy.argmax(mismatch))
        raise ManufacturedInconsistencyError(
            f'{what} deviates by {abs(value[worst] - reference[worst]):.3e} from its finite difference oracle'
        )
