# -*- coding: utf-8 -*-
"""Manufactured Stokes-Darcy problems."""
from .examples import *
from .manufactured import *

__all__ = (examples.__all__ + manufactured.__all__)
