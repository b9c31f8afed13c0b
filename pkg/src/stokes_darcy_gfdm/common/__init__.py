# -*- coding: utf-8 -*-
"""Enumerations and exceptions shared by all modules."""
