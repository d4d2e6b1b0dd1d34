#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .sweep import clique_chain
from .properties import (
    period_two_sweep,
    fixed_point_sweep,
    fixed_point_exhaustive,
    non_clique_sweep,
)

__all__ = [
    "clique_chain",
    "fixed_point_exhaustive",
    "fixed_point_sweep",
    "non_clique_sweep",
    "period_two_sweep",
]
