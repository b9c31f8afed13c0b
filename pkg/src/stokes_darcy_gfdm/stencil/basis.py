# -*- coding: utf-8 -*-
"""Taylor derivative basis of a given truncation order."""
import dataclasses
import functools
import math
from typing import Tuple, Union

import numpy

__all__ = ('DerivativeBasis', 'SUPPORTED_ORDERS')

SUPPORTED_ORDERS = (2, 4, 6)

MultiIndex = Tuple[int, int]


def _multi_indices(order: int) -> Tuple[MultiIndex, ...]:
    indices = []
    for degree in range(1, order + 1):
        indices.append((degree, 0))
        indices.append((0, degree))
        indices.extend((degree - k, k) for k in range(1, degree))
    return tuple(indices)


def label(multi_index: MultiIndex) -> str:
    """Return the derivative label of a multi-index, e.g. ``xxy`` for ``(2, 1)``."""
    return 'x' * multi_index[0] + 'y' * multi_index[1]


@dataclasses.dataclass(frozen=True)
class DerivativeBasis:
    """Ordered set of partial derivatives estimated by a stencil.

    Derivatives of total degree ``s`` are listed as ``(s, 0)``, ``(0, s)``, ``(s - 1, 1)``, ..., ``(1, s - 1)``, so that
    for order 2 the rows are ``x, y, xx, yy, xy``.
    """

    order: int

    def __post_init__(self):
        if self.order not in SUPPORTED_ORDERS:
            raise ValueError(f'unsupported truncation order {self.order}, choose from {SUPPORTED_ORDERS}')

    @functools.cached_property
    def multi_indices(self) -> Tuple[MultiIndex, ...]:
        return _multi_indices(self.order)

    @property
    def count(self) -> int:
        return len(self.multi_indices)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(label(multi_index) for multi_index in self.multi_indices)

    @property
    def degrees(self) -> numpy.ndarray:
        """Return the total degree of each derivative."""
        return numpy.array([i + j for i, j in self.multi_indices])

    def index(self, derivative: Union[int, str, MultiIndex]) -> int:
        """Return the row of a derivative given by row index, label such as ``'xy'`` or multi-index ``(1, 1)``.

        :raises KeyError: if the derivative is not part of the basis
        """
        if isinstance(derivative, (int, numpy.integer)):
            if not 0 <= derivative < self.count:
                raise KeyError(f'row {derivative} out of range for a basis of {self.count} derivatives')
            return int(derivative)
        if isinstance(derivative, str):
            derivative = (derivative.count('x'), derivative.count('y'))
        try:
            return self.multi_indices.index(tuple(derivative))
        except ValueError as exception:
            raise KeyError(f'derivative {derivative} is not in the basis of order {self.order}') from exception

    def taylor_matrix(self, offsets: numpy.ndarray) -> numpy.ndarray:
        """Return the matrix of Taylor terms ``h^i l^j / (i! j!)`` with one row per offset ``(h, l)``."""
        offsets = numpy.atleast_2d(offsets)
        h, l = offsets[:, 0:1], offsets[:, 1:2]
        powers = numpy.array(self.multi_indices)
        factorials = numpy.array([math.factorial(i) * math.factorial(j) for i, j in self.multi_indices], dtype=float)
        return h**powers[:, 0] * l**powers[:, 1] / factorials
