#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Seeded random sweeps of the structural properties of symmetric systems over
complete graphs:

* every 2-periodic state ``x`` of ``[K_n, f, pi]`` satisfies ``F(x) = inv(x)``;
* the fixed points of ``[K_n, f, id]`` are constant vectors;
* non-cliques of ``HatH(n)`` are rejected before any construction.

Each sweep returns a summary dictionary whose ``violations`` entry must be 0.
"""

import logging
from collections import Counter

import numpy as np

from ..errors import InvalidCliqueError
from ..dynamics.sds import SdsDefinition
from ..dynamics.phase_space import phase_space
from ..dynamics.state import inv
from ..dynamics.vertex_function import VertexFunction
from ..construction.prescription import HatClique
from ..graphs.word_graph import ImplicitGraphSpec, adjacent

logger = logging.getLogger(__name__)


def _random_function(rng, n):
    return VertexFunction.from_values(rng.integers(0, 2, size=1 << n))


def period_two_sweep(trials, n_min=2, n_max=8, seed=None):
    """Random ``(f, pi, n)``: 2-periodic states are sent to their complement."""
    rng = np.random.default_rng(seed)
    violations, checked, per_n = 0, 0, Counter()
    for _ in range(trials):
        n = int(rng.integers(n_min, n_max + 1))
        order = (rng.permutation(n) + 1).tolist()
        ps = phase_space(SdsDefinition.complete(n, _random_function(rng, n), order))
        per_n[n] += 1
        for start in ps.cycle_starts[ps.cycle_lengths == 2]:
            for x in ps.cycle(int(start)):
                checked += 1
                image = ps.image(x)
                if image != inv(x) or any(a == b for a, b in zip(x, image)):
                    violations += 1
                    logger.error("n=%d order=%s: F(%s) = %s", n, order, x, image)
    return {"property": "period_two_inverse", "trials": trials, "seed": seed,
            "states_checked": checked, "violations": violations,
            "per_n": {str(k): v for k, v in sorted(per_n.items())}}


def _non_constant_fixed_points(n, f):
    constant = {0, (1 << n) - 1}
    return [x for x in phase_space(SdsDefinition.complete(n, f)).fixed_points
            if x.value not in constant]


def fixed_point_sweep(trials, n_min=1, n_max=12, seed=None):
    """Random ``f``: fixed points of ``[K_n, f, id]`` are constant vectors."""
    rng = np.random.default_rng(seed)
    violations = 0
    for _ in range(trials):
        n = int(rng.integers(n_min, n_max + 1))
        bad = _non_constant_fixed_points(n, _random_function(rng, n))
        if bad:
            violations += 1
            logger.error("n=%d: non-constant fixed points %s", n, [x.label for x in bad])
    return {"property": "constant_fixed_points", "trials": trials, "seed": seed,
            "violations": violations}


def fixed_point_exhaustive(n):
    """Every ``f`` over ``K_n``: number of systems with a non-constant fixed point."""
    return sum(1 for table in range(1 << (1 << n))
               if _non_constant_fixed_points(n, VertexFunction(n, table)))


def non_clique_sweep(trials, n_min=3, n_max=10, seed=None):
    """Random non-cliques of ``HatH(n)`` must be rejected before construction."""
    rng = np.random.default_rng(seed)
    violations, generated = 0, 0
    while generated < trials:
        n = int(rng.integers(n_min, n_max + 1))
        size = int(rng.integers(2, 5))
        values = rng.choice(1 << (n - 1), size=min(size, 1 << (n - 1)), replace=False)
        clique = HatClique.from_values(n, values, validate=False)
        spec = ImplicitGraphSpec("HatH", n)
        members = clique.members
        if all(adjacent(spec, x, y) for k, x in enumerate(members) for y in members[k + 1:]):
            continue
        generated += 1
        try:
            HatClique(n, members)
        except InvalidCliqueError:
            continue
        violations += 1
        logger.error("n=%d: non-clique %s accepted", n, [m.label for m in members])
    return {"property": "non_clique_rejected", "trials": trials, "seed": seed,
            "violations": violations}
