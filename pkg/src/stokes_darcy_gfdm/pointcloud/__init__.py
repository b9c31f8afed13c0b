# -*- coding: utf-8 -*-
"""Collocation nodes, interface curves and interface motion."""
from .cloud import *
from .curves import *
from .motion import *

__all__ = (cloud.__all__ + curves.__all__ + motion.__all__)
