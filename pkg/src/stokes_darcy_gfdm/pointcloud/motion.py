# -*- coding: utf-8 -*-
"""Rigid motion of closed interfaces over a uniform time grid.

The governing equations carry no time derivative, so every time slice is an independent static problem posed on the
translated interface.
"""
import dataclasses
from typing import Callable, Optional, Tuple

import numpy

from ..common.exceptions import CurveEscapedDomainError
from .curves import InterfaceCurve, Rectangle

__all__ = ('LinearPath', 'MotionSpec', 'interface_at_time')


@dataclasses.dataclass(frozen=True)
class LinearPath:
    """Straight path of the curve center from ``start`` at ``t = 0`` to ``end`` at ``t = t_final``.

    Calling the path returns the translation relative to the position at ``t = 0``.
    """

    start: Tuple[float, float]
    end: Tuple[float, float]
    t_final: float

    def __call__(self, t: float) -> numpy.ndarray:
        velocity = (numpy.asarray(self.end, dtype=float) - numpy.asarray(self.start, dtype=float)) / self.t_final
        return velocity * t


@dataclasses.dataclass(frozen=True)
class MotionSpec:
    """Rigid translation of an interface on the time grid ``t_j = t_start + (j - 1) dt``, ``dt = t_final / n_steps``.

    :param path: callable returning the translation vector at time ``t``
    :param t_final: the final time ``T``
    :param n_steps: number of time steps ``N_t``, giving ``N_t + 1`` slices
    :param domain: optional global rectangle the moved curve has to stay inside
    """

    path: Callable[[float], numpy.ndarray]
    t_final: float
    n_steps: int
    t_start: float = 0.
    domain: Optional[Rectangle] = None

    def __post_init__(self):
        if self.n_steps < 1:
            raise ValueError(f'the number of time steps must be at least 1, got {self.n_steps}')
        if self.t_final <= 0:
            raise ValueError(f'the final time must be positive, got {self.t_final}')

    @property
    def dt(self) -> float:
        return self.t_final / self.n_steps

    def time(self, j: int) -> float:
        """Return the time of slice ``j``, counting from one."""
        if not 1 <= j <= self.n_steps + 1:
            raise ValueError(f'time index must be in [1, {self.n_steps + 1}], got {j}')
        return self.t_start + (j - 1) * self.dt

    def times(self) -> numpy.ndarray:
        return numpy.array([self.time(j) for j in range(1, self.n_steps + 2)])


def interface_at_time(curve: InterfaceCurve, motion: MotionSpec, j: int) -> InterfaceCurve:
    """Return the interface curve translated to time slice ``j``.

    :raises ValueError: if ``j`` is outside ``[1, N_t + 1]``
    :raises CurveEscapedDomainError: if the moved curve touches or leaves the global rectangle of the motion
    """
    t = motion.time(j)
    moved = curve.translated(numpy.asarray(motion.path(t), dtype=float))

    if motion.domain is not None and not numpy.all(motion.domain.contains(moved.polyline())):
        raise CurveEscapedDomainError(f'the {curve.kind.value} interface leaves {motion.domain} at t = {t:.6g}')

    return moved
