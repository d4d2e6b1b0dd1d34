#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Update functions from hat-graph cliques
from .prescription import (
    HatClique,
    SymmetricUpdateFunction,
    construct_update_function,
    check_nonadjacent_pair,
)

# Exhaustive search and end-to-end verification
from .oracle import brute_force_eta
from .verification import LEGS, seed_clique, solve_word_graph, verify_theorems

__all__ = [
    "HatClique",
    "LEGS",
    "SymmetricUpdateFunction",
    "brute_force_eta",
    "check_nonadjacent_pair",
    "construct_update_function",
    "seed_clique",
    "solve_word_graph",
    "verify_theorems",
]
