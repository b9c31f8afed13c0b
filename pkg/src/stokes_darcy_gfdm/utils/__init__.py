# -*- coding: utf-8 -*-
"""Utility functions that do not belong to a single module."""
