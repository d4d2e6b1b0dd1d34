#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .codes import (
    INFINITY,
    Code,
    hamming_distance,
    min_distance,
    distance_to_json,
    hamming_code,
    code_to_clique,
    clique_to_code,
    a_n3_reference,
)

__all__ = [
    "INFINITY",
    "Code",
    "a_n3_reference",
    "clique_to_code",
    "code_to_clique",
    "distance_to_json",
    "hamming_code",
    "hamming_distance",
    "min_distance",
]
