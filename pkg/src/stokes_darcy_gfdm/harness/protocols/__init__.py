# -*- coding: utf-8 -*-
"""Experiment protocols."""
