# -*- coding: utf-8 -*-
"""Rectangular regions and parametric interface curves.

Closed curves are star-shaped about their ``center`` and described in polar form ``r(theta)``, so that the position,
its derivative and the point-in-region test all follow from the radius function and its derivative. The line segment is
parametrized over ``[0, 1]``.
"""
import abc
import dataclasses
import math
from typing import ClassVar, Dict, Tuple, Type

import numpy

from ..common.exceptions import DegenerateCurveError
from ..common.types import CurveKind

__all__ = (
    'Rectangle', 'InterfaceCurve', 'LineSegment', 'ClosedCurve', 'Circle', 'TwoPetaled', 'Flower', 'Heart', 'Ellipse',
    'Pentagon', 'build_curve'
)

TOLERANCE_DEGENERATE = 1E-10


@dataclasses.dataclass(frozen=True)
class Rectangle:
    """Axis aligned rectangle ``[x_min, x_max] x [y_min, y_max]``."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise ValueError(f'invalid rectangle bounds: {self}')

    @classmethod
    def from_bounds(cls, bounds) -> 'Rectangle':
        """Construct from a sequence ``[x_min, x_max, y_min, y_max]``."""
        x_min, x_max, y_min, y_max = (float(value) for value in bounds)
        return cls(x_min, x_max, y_min, y_max)

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def center(self) -> numpy.ndarray:
        return numpy.array([0.5 * (self.x_min + self.x_max), 0.5 * (self.y_min + self.y_max)])

    def bounding(self, other: 'Rectangle') -> 'Rectangle':
        """Return the smallest rectangle containing both rectangles."""
        return Rectangle(
            min(self.x_min, other.x_min), max(self.x_max, other.x_max), min(self.y_min, other.y_min),
            max(self.y_max, other.y_max)
        )

    def overlap_area(self, other: 'Rectangle') -> float:
        """Return the area of the intersection with another rectangle."""
        width = min(self.x_max, other.x_max) - max(self.x_min, other.x_min)
        height = min(self.y_max, other.y_max) - max(self.y_min, other.y_min)
        return max(width, 0.) * max(height, 0.)

    def grid(self, spacing: float) -> numpy.ndarray:
        """Return the tensor-product grid of the rectangle with the given spacing as an ``(n, 2)`` array.

        The number of intervals in each direction is the rounded ratio of the side length and the spacing, so the last
        grid line always coincides with the edge of the rectangle.
        """
        n_x = max(int(round(self.width / spacing)), 1)
        n_y = max(int(round(self.height / spacing)), 1)
        xs = numpy.linspace(self.x_min, self.x_max, n_x + 1)
        ys = numpy.linspace(self.y_min, self.y_max, n_y + 1)
        grid_x, grid_y = numpy.meshgrid(xs, ys)
        return numpy.column_stack([grid_x.ravel(), grid_y.ravel()])

    def on_boundary(self, points: numpy.ndarray, tolerance: float = 1E-12) -> numpy.ndarray:
        """Return a boolean mask of the points that lie on the boundary of the rectangle."""
        points = numpy.atleast_2d(points)
        x, y = points[:, 0], points[:, 1]
        inside = self.contains(points, tolerance=-tolerance)
        on_edge = (
            numpy.isclose(x, self.x_min, atol=tolerance, rtol=0) | numpy.isclose(x, self.x_max, atol=tolerance, rtol=0)
            | numpy.isclose(y, self.y_min, atol=tolerance, rtol=0)
            | numpy.isclose(y, self.y_max, atol=tolerance, rtol=0)
        )
        return inside & on_edge

    def contains(self, points: numpy.ndarray, tolerance: float = 0.) -> numpy.ndarray:
        """Return a boolean mask of the points strictly inside the rectangle shrunk by ``tolerance``.

        A negative tolerance grows the rectangle, which turns the test into a closed-set test.
        """
        points = numpy.atleast_2d(points)
        x, y = points[:, 0], points[:, 1]
        return (
            (x > self.x_min + tolerance) & (x < self.x_max - tolerance) & (y > self.y_min + tolerance) &
            (y < self.y_max - tolerance)
        )

    def outward_normals(self, points: numpy.ndarray, tolerance: float = 1E-12) -> numpy.ndarray:
        """Return the outward unit normal for boundary points, NaN at corners and off the boundary."""
        points = numpy.atleast_2d(points)
        x, y = points[:, 0], points[:, 1]
        normals = numpy.zeros_like(points, dtype=float)
        edges = (
            (numpy.isclose(x, self.x_min, atol=tolerance, rtol=0), (-1., 0.)),
            (numpy.isclose(x, self.x_max, atol=tolerance, rtol=0), (1., 0.)),
            (numpy.isclose(y, self.y_min, atol=tolerance, rtol=0), (0., -1.)),
            (numpy.isclose(y, self.y_max, atol=tolerance, rtol=0), (0., 1.)),
        )
        hits = numpy.zeros(len(points), dtype=int)
        for mask, normal in edges:
            normals[mask] = normal
            hits += mask
        normals[hits != 1] = numpy.nan
        return normals


@dataclasses.dataclass(frozen=True)
class InterfaceCurve(abc.ABC):
    """Parametric interface curve ``theta -> (x(theta), y(theta))``."""

    kind: ClassVar[CurveKind]

    @abc.abstractmethod
    def position(self, theta) -> numpy.ndarray:
        """Return the ``(n, 2)`` positions for the parameter values."""

    @abc.abstractmethod
    def derivative(self, theta) -> numpy.ndarray:
        """Return the ``(n, 2)`` derivatives of the position with respect to the parameter."""

    @abc.abstractmethod
    def sample_parameters(self, count: int) -> numpy.ndarray:
        """Return ``count`` parameter values used to place interface nodes."""

    @abc.abstractmethod
    def dense_parameters(self, count: int) -> numpy.ndarray:
        """Return ``count`` parameter values that cover the whole curve, used for distance and containment checks."""

    @abc.abstractmethod
    def translated(self, shift) -> 'InterfaceCurve':
        """Return a copy of the curve rigidly translated by ``shift``."""

    def tangent(self, theta) -> numpy.ndarray:
        """Return the unit tangent in the direction of increasing parameter."""
        derivative = self.derivative(theta)
        norm = numpy.linalg.norm(derivative, axis=1)
        if numpy.any(norm < TOLERANCE_DEGENERATE):
            raise DegenerateCurveError(f'{self.kind.value} curve has a vanishing tangent at a sampled parameter')
        return derivative / norm[:, None]

    def left_normal(self, theta) -> numpy.ndarray:
        """Return the unit normal obtained by rotating the tangent counter-clockwise."""
        tangent = self.tangent(theta)
        return numpy.column_stack([-tangent[:, 1], tangent[:, 0]])

    def polyline(self, count: int = 4096) -> numpy.ndarray:
        """Return a dense polyline of the curve as an ``(count, 2)`` array."""
        return self.position(self.dense_parameters(count))

    def length(self, count: int = 4096) -> float:
        """Return the length of the curve estimated from a dense polyline."""
        points = self.polyline(count)
        if self.kind.is_closed:
            points = numpy.vstack([points, points[:1]])
        return float(numpy.sum(numpy.linalg.norm(numpy.diff(points, axis=0), axis=1)))

    def parameters(self) -> dict:
        """Return the shape parameters as a plain dictionary."""
        return {'kind': self.kind.value, **dataclasses.asdict(self)}


@dataclasses.dataclass(frozen=True)
class LineSegment(InterfaceCurve):
    """Straight interface between two points, parametrized over ``[0, 1]``."""

    kind: ClassVar[CurveKind] = CurveKind.LINE_SEGMENT

    start: Tuple[float, float] = (0., 1.)
    end: Tuple[float, float] = (1., 1.)

    def position(self, theta) -> numpy.ndarray:
        theta = numpy.atleast_1d(numpy.asarray(theta, dtype=float))
        start, end = numpy.asarray(self.start, dtype=float), numpy.asarray(self.end, dtype=float)
        return start[None, :] + theta[:, None] * (end - start)[None, :]

    def derivative(self, theta) -> numpy.ndarray:
        theta = numpy.atleast_1d(numpy.asarray(theta, dtype=float))
        direction = numpy.asarray(self.end, dtype=float) - numpy.asarray(self.start, dtype=float)
        return numpy.tile(direction, (len(theta), 1))

    def sample_parameters(self, count: int) -> numpy.ndarray:
        """Return ``count`` parameters uniformly spaced in the open segment, excluding its end points."""
        return numpy.arange(1, count + 1) / (count + 1)

    def dense_parameters(self, count: int) -> numpy.ndarray:
        return numpy.linspace(0., 1., count)

    def translated(self, shift) -> 'LineSegment':
        dx, dy = (float(value) for value in shift)
        return dataclasses.replace(
            self, start=(self.start[0] + dx, self.start[1] + dy), end=(self.end[0] + dx, self.end[1] + dy)
        )

    def distance(self, points: numpy.ndarray) -> numpy.ndarray:
        """Return the exact distance of points to the closed segment."""
        points = numpy.atleast_2d(points)
        start, end = numpy.asarray(self.start, dtype=float), numpy.asarray(self.end, dtype=float)
        direction = end - start
        projection = numpy.clip((points - start) @ direction / (direction @ direction), 0., 1.)
        return numpy.linalg.norm(points - (start + projection[:, None] * direction), axis=1)


@dataclasses.dataclass(frozen=True)
class ClosedCurve(InterfaceCurve):
    """Closed curve, star-shaped about ``center``, given by a polar radius ``r(theta)``."""

    center: Tuple[float, float] = (0., 0.)

    @abc.abstractmethod
    def radius(self, theta: numpy.ndarray) -> numpy.ndarray:
        """Return the polar radius."""

    @abc.abstractmethod
    def radius_derivative(self, theta: numpy.ndarray) -> numpy.ndarray:
        """Return the derivative of the polar radius."""

    def position(self, theta) -> numpy.ndarray:
        theta = numpy.atleast_1d(numpy.asarray(theta, dtype=float))
        radius = self.radius(theta)
        return numpy.column_stack([
            self.center[0] + radius * numpy.cos(theta),
            self.center[1] + radius * numpy.sin(theta),
        ])

    def derivative(self, theta) -> numpy.ndarray:
        theta = numpy.atleast_1d(numpy.asarray(theta, dtype=float))
        radius, slope = self.radius(theta), self.radius_derivative(theta)
        cos, sin = numpy.cos(theta), numpy.sin(theta)
        return numpy.column_stack([slope * cos - radius * sin, slope * sin + radius * cos])

    def sample_parameters(self, count: int) -> numpy.ndarray:
        """Return ``count`` parameters uniformly spaced over ``[0, 2 pi)``.

        The samples start at ``theta = 0``. If a sample falls on a point where the tangent vanishes, such as the cusp of
        the heart, the whole set is shifted by half a step.

        :raises DegenerateCurveError: if the shifted samples are still degenerate
        """
        theta = 2 * math.pi * numpy.arange(count) / count

        for candidate in (theta, theta + math.pi / count):
            if self._is_regular(candidate):
                return candidate

        raise DegenerateCurveError(f'{self.kind.value} curve is degenerate for {count} samples')

    def dense_parameters(self, count: int) -> numpy.ndarray:
        return 2 * math.pi * numpy.arange(count) / count

    def translated(self, shift) -> 'ClosedCurve':
        dx, dy = (float(value) for value in shift)
        return dataclasses.replace(self, center=(self.center[0] + dx, self.center[1] + dy))

    def contains(self, points: numpy.ndarray) -> numpy.ndarray:
        """Return a boolean mask of the points strictly inside the curve."""
        points = numpy.atleast_2d(points)
        offset = points - numpy.asarray(self.center, dtype=float)
        distance = numpy.hypot(offset[:, 0], offset[:, 1])
        return distance < self.radius(numpy.arctan2(offset[:, 1], offset[:, 0]))

    def _is_regular(self, theta: numpy.ndarray) -> bool:
        radius = self.radius(theta)
        speed = numpy.linalg.norm(self.derivative(theta), axis=1)
        return bool(numpy.all(radius > TOLERANCE_DEGENERATE) and numpy.all(speed > TOLERANCE_DEGENERATE))


@dataclasses.dataclass(frozen=True)
class Circle(ClosedCurve):
    """Circle of given radius."""

    kind: ClassVar[CurveKind] = CurveKind.CIRCLE

    circle_radius: float = 0.5

    def radius(self, theta):
        return numpy.full_like(numpy.asarray(theta, dtype=float), self.circle_radius)

    def radius_derivative(self, theta):
        return numpy.zeros_like(numpy.asarray(theta, dtype=float))


@dataclasses.dataclass(frozen=True)
class _Rose(ClosedCurve):
    """Curve ``r = base + amplitude sin(frequency theta)``."""

    base: float = 0.5
    amplitude: float = 0.2
    frequency: int = 2

    def radius(self, theta):
        return self.base + self.amplitude * numpy.sin(self.frequency * numpy.asarray(theta, dtype=float))

    def radius_derivative(self, theta):
        return self.amplitude * self.frequency * numpy.cos(self.frequency * numpy.asarray(theta, dtype=float))


@dataclasses.dataclass(frozen=True)
class TwoPetaled(_Rose):
    """Two-petaled interface ``r = 0.5 + 0.2 sin(2 theta)``."""

    kind: ClassVar[CurveKind] = CurveKind.TWO_PETALED

    frequency: int = 2


@dataclasses.dataclass(frozen=True)
class Flower(_Rose):
    """Flower shaped interface ``r = 0.5 + 0.2 sin(5 theta)``."""

    kind: ClassVar[CurveKind] = CurveKind.FLOWER

    frequency: int = 5


@dataclasses.dataclass(frozen=True)
class Heart(ClosedCurve):
    """Heart shaped interface ``r = scale (1 - sin theta)`` about ``(0, 0.2)``, with a cusp at ``theta = pi / 2``."""

    kind: ClassVar[CurveKind] = CurveKind.HEART

    center: Tuple[float, float] = (0., 0.2)
    scale: float = 0.3

    def radius(self, theta):
        return self.scale * (1. - numpy.sin(numpy.asarray(theta, dtype=float)))

    def radius_derivative(self, theta):
        return -self.scale * numpy.cos(numpy.asarray(theta, dtype=float))


@dataclasses.dataclass(frozen=True)
class Ellipse(ClosedCurve):
    """Axis aligned ellipse with semi-axes ``a`` and ``b`` in polar form."""

    kind: ClassVar[CurveKind] = CurveKind.ELLIPSE

    a: float = 0.25
    b: float = 0.15

    def radius(self, theta):
        theta = numpy.asarray(theta, dtype=float)
        return self.a * self.b / numpy.sqrt((self.b * numpy.cos(theta))**2 + (self.a * numpy.sin(theta))**2)

    def radius_derivative(self, theta):
        theta = numpy.asarray(theta, dtype=float)
        denominator = (self.b * numpy.cos(theta))**2 + (self.a * numpy.sin(theta))**2
        return -self.a * self.b * (self.a**2 - self.b**2) * numpy.sin(theta) * numpy.cos(theta) / denominator**1.5


@dataclasses.dataclass(frozen=True)
class Pentagon(ClosedCurve):
    """Regular pentagon with rounded corners.

    The radius oscillates between the circumradius at the five vertices and the inradius ``R cos(pi / 5)`` at the edge
    midpoints; the first vertex sits at angle ``rotation``.
    """

    kind: ClassVar[CurveKind] = CurveKind.PENTAGON

    circumradius: float = 0.25
    rotation: float = math.pi / 2

    @property
    def _depth(self) -> float:
        return 1. - math.cos(math.pi / 5)

    def radius(self, theta):
        phase = 5 * (numpy.asarray(theta, dtype=float) - self.rotation)
        return self.circumradius * (1. - 0.5 * self._depth * (1. - numpy.cos(phase)))

    def radius_derivative(self, theta):
        phase = 5 * (numpy.asarray(theta, dtype=float) - self.rotation)
        return -2.5 * self.circumradius * self._depth * numpy.sin(phase)


CURVE_CLASSES: Dict[CurveKind, Type[InterfaceCurve]] = {
    CurveKind.LINE_SEGMENT: LineSegment,
    CurveKind.CIRCLE: Circle,
    CurveKind.TWO_PETALED: TwoPetaled,
    CurveKind.FLOWER: Flower,
    CurveKind.HEART: Heart,
    CurveKind.ELLIPSE: Ellipse,
    CurveKind.PENTAGON: Pentagon,
}


def build_curve(kind, **parameters) -> InterfaceCurve:
    """Construct an interface curve of the given kind from keyword parameters.

    Sequences are converted to tuples so the resulting curve stays hashable.

    :param kind: a ``CurveKind`` or its string value
    :param parameters: shape parameters of the curve class
    :raises ValueError: for unknown kinds or parameters
    """
    kind = CurveKind(kind)
    cls = CURVE_CLASSES[kind]
    names = {field.name for field in dataclasses.fields(cls)}
    unknown = set(parameters) - names

    if unknown:
        raise ValueError(f'unknown parameters for the {kind.value} curve: {", ".join(sorted(unknown))}')

    converted = {key: tuple(value) if isinstance(value, (list, tuple)) else value for key, value in parameters.items()}
    return cls(**converted)
