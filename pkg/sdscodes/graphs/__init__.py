#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Words and linear maps
from .words import (
    PatternWord,
    contains_subsequence,
    in_D,
    theta,
    theta_inverse,
    prefix_sum_T,
    difference_map,
)

# Word graphs
from .word_graph import ImplicitGraphSpec, ExplicitGraph, adjacent, materialize

# Clique search
from .clique import (
    CliqueResult,
    is_clique,
    max_clique,
    greedy_lower_bound,
    coloring_upper_bound,
    brute_force_clique_number,
)

__all__ = [
    "CliqueResult",
    "ExplicitGraph",
    "ImplicitGraphSpec",
    "PatternWord",
    "adjacent",
    "brute_force_clique_number",
    "coloring_upper_bound",
    "contains_subsequence",
    "difference_map",
    "greedy_lower_bound",
    "in_D",
    "is_clique",
    "materialize",
    "max_clique",
    "prefix_sum_T",
    "theta",
    "theta_inverse",
]
