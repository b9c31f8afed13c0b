# -*- coding: utf-8 -*-
"""Module with common data types."""
import enum


class Side(enum.Enum):
    """Enumeration of the two subdomains of the coupled problem."""

    FLUID = 'fluid'
    POROUS = 'porous'


class NodeKind(enum.Enum):
    """Enumeration of the classes of collocation nodes."""

    BOUNDARY = 'boundary'
    INTERFACE = 'interface'
    INTERIOR = 'interior'


class CurveKind(enum.Enum):
    """Enumeration of the supported interface curves."""

    LINE_SEGMENT = 'line_segment'
    CIRCLE = 'circle'
    TWO_PETALED = 'two_petaled'
    FLOWER = 'flower'
    HEART = 'heart'
    PENTAGON = 'pentagon'
    ELLIPSE = 'ellipse'

    @property
    def is_closed(self) -> bool:
        """Return whether the curve encloses the porous region."""
        return self is not CurveKind.LINE_SEGMENT


class Field(enum.Enum):
    """Enumeration of the unknown and derived fields."""

    U1 = 'u1'  # Fluid velocity, first component
    U2 = 'u2'  # Fluid velocity, second component
    P = 'p'  # Fluid pressure
    PHI = 'phi'  # Piezometric head of the porous medium


class PorousBoundary(enum.Enum):
    """Enumeration of the conditions that can be imposed on the outer boundary of the porous region."""

    DIRICHLET = 'dirichlet'
    NEUMANN = 'neumann'
