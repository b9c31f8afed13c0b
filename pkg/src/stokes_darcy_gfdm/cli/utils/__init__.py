# -*- coding: utf-8 -*-
"""Utilities for the command line interface."""
