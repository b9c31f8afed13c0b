# -*- coding: utf-8 -*-
"""Meshless generalized finite difference solver for the coupled Stokes-Darcy problem."""
__version__ = '0.3.0'
