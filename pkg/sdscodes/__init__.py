#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Sequential dynamical systems over complete graphs, their period-2 orbits and
the binary one-error-correcting codes that count them.
"""

__version__ = "1.0.0"
