# -*- coding: utf-8 -*-
"""Assembly of the coupled collocation system."""
from .coupled import *
from .unknowns import *

__all__ = (coupled.__all__ + unknowns.__all__)
