# -*- coding: utf-8 -*-
"""Generalized finite difference stencils on one-sided stars."""
from .basis import *
from .cholesky import *
from .coefficients import *
from .star import *

__all__ = (basis.__all__ + cholesky.__all__ + coefficients.__all__ + star.__all__)
