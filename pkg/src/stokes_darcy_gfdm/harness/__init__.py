# -*- coding: utf-8 -*-
"""Experiment harness: protocols, convergence studies, sweeps and CSV reports."""
from .experiment import *
from .reports import *

__all__ = (experiment.__all__ + reports.__all__)
