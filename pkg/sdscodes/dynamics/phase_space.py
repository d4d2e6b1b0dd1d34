#!/usr/bin/env python3

"""
Phase space of a system map: the functional digraph ``x -> F(x)`` on all
``2^n`` states, with its cycles and a census of cycle lengths.

>>> ps = phase_space(SdsDefinition.complete(2, "1010"))
>>> ps.census
{2: 1}
>>> [[s.label for s in c] for c in ps.cycles]
[['00', '11']]
"""

import time
import logging
import itertools

import numpy as np
import networkx as nx

from ..errors import BudgetExceeded
from ..utils import setting, natural_delta
from .state import SystemState
from .sds import SdsDefinition, UpdateOrder, sds_map_array
from .vertex_function import VertexFunction

logger = logging.getLogger(__name__)


class PhaseSpace(object):
    """Enumerated phase space.

    Cycles are kept as integer arrays; ``SystemState`` objects are only built
    when ``cycles`` or ``edges()`` is read.

    Attributes:
        n             (int): state-vector length.
        successor     (numpy.ndarray): ``successor[x] = F(x)`` on integer encodings.
        periodic      (numpy.ndarray): boolean mask of the states lying on a cycle.
        cycle_starts  (numpy.ndarray): smallest state of every cycle, ascending.
        cycle_lengths (numpy.ndarray): length of the cycle at the same position.
        census        (dict): cycle length to number of cycles of that length.
    """

    def __init__(self, n, successor):
        self.n          = n
        self.successor  = np.asarray(successor, dtype=np.int64)
        self.periodic, smallest = _cycle_structure(self.successor, n)
        self.cycle_starts, self.cycle_lengths = np.unique(
            smallest[self.periodic], return_counts=True)
        lengths, counts = np.unique(self.cycle_lengths, return_counts=True)
        self.census     = {int(k): int(c) for k, c in zip(lengths, counts)}
        self._cycles    = None

    @property
    def cycles(self):
        """Cycles as lists of ``SystemState``, each one starting at its
        smallest state, sorted by that state."""
        if self._cycles is None:
            self._cycles = [list(self.cycle(int(x))) for x in self.cycle_starts]
        return self._cycles

    def cycle(self, start):
        """Yield the states of the cycle through the periodic state ``start``."""
        x = start
        while True:
            yield SystemState.from_int(x, self.n)
            x = int(self.successor[x])
            if x == start:
                return

    def __len__(self):
        return int(self.successor.size)

    def __repr__(self):
        return f"PhaseSpace(n={self.n}, census={self.census})"

    def image(self, state):
        """``F(state)`` read from the table."""
        return SystemState.from_int(int(self.successor[state.value]), self.n)

    @property
    def periodic_count(self):
        return int(self.periodic.sum())

    @property
    def fixed_points(self):
        fixed = np.flatnonzero(self.successor == np.arange(self.successor.size))
        return [SystemState.from_int(int(x), self.n) for x in fixed]

    def edges(self):
        """Yield ``(x, F(x))`` as ``SystemState`` pairs in ascending order of ``x``."""
        for x, y in enumerate(self.successor):
            yield SystemState.from_int(x, self.n), SystemState.from_int(int(y), self.n)

    def to_networkx(self):
        g = nx.DiGraph()
        g.add_edges_from((x.label, y.label) for x, y in self.edges())
        return g


def _cycle_structure(successor, n):
    """Periodic mask and, on periodic states, the smallest state of their cycle.

    After ``n`` doublings ``power = F^(2^n)`` and ``smallest[x]`` is the
    minimum of ``x, F(x), ..., F^(2^n - 1)(x)``. Every transient reaches its
    cycle in fewer than ``2^n`` steps, so the periodic states are the image of
    ``power``, and on a cycle the window covers the whole cycle.
    """
    power = successor.copy()
    smallest = np.arange(successor.size, dtype=np.int64)
    for _ in range(n):
        np.minimum(smallest, smallest[power], out=smallest)
        power = power[power]
    mask = np.zeros(successor.size, dtype=bool)
    mask[power] = True
    return mask, smallest


def _check_cap(n, max_n, force, what="phase space"):
    if max_n is None:
        max_n = int(setting("phase_space.max_n", 24))
    if n > max_n and not force:
        raise BudgetExceeded(f"{what} of dimension {n} exceeds the cap n <= {max_n}")


def phase_space(sds, max_n=None, force=False):
    """Enumerate the phase space of ``sds``.

    Args:
        sds   (SdsDefinition): the system.
        max_n (int, optional): enumeration cap, ``phase_space.max_n`` setting
            by default.
        force (bool): ignore the cap.

    Raises:
        BudgetExceeded: ``sds.n`` above the cap.
    """
    _check_cap(sds.n, max_n, force)
    start = time.time()
    successor = sds_map_array(sds, np.arange(1 << sds.n, dtype=np.int64))
    ps = PhaseSpace(sds.n, successor)
    logger.debug("phase space of %d states enumerated in %s, census %s",
                 len(ps), natural_delta(time.time() - start), ps.census)
    return ps


def two_cycle_count(sds, max_n=None, force=False):
    """Number of 2-cycles of the phase space, ``eta(g, pi)`` on ``[K_n, g, pi]``.

    On ``[K_n, g, id]`` a 2-periodic state satisfies ``F(x) = inv(x)``, so every
    2-cycle has exactly one member with ``x_1 = 0``; only those ``2^(n-1)``
    states are checked.
    """
    if not sds.is_symmetric_complete():
        return phase_space(sds, max_n, force).census.get(2, 0)
    _check_cap(sds.n, max_n, force)
    return _fast_two_cycle_count(sds)


def _fast_two_cycle_count(sds):
    n = sds.n
    xs = np.arange(1 << (n - 1), dtype=np.int64)
    complement = xs ^ ((1 << n) - 1)
    fx = sds_map_array(sds, xs)
    hits = fx == complement
    if not hits.any():
        return 0
    back = sds_map_array(sds, complement[hits])
    return int(np.count_nonzero(back == xs[hits]))


def fixed_points(sds, max_n=None, force=False):
    """States ``x`` with ``F(x) = x``, in ascending order."""
    return phase_space(sds, max_n, force).fixed_points


def constant_fixed_point_witness(n):
    """Function ``f`` whose ``[K_n, f, id]`` fixes both constant vectors.

    The conjunction of all arguments is used: ``f(1...1) = 1`` and ``f = 0``
    elsewhere.
    """
    return VertexFunction(n, 1 << ((1 << n) - 1))


def max_two_cycles_over_orders(n, max_n=3, force=False):
    """Largest number of 2-cycles over every ``[K_n, g, pi]``.

    Scans all ``2^(2^n)`` tables and all ``n!`` update orders.

    Returns:
        :obj:`tuple`: ``(count, table, order)`` of the first maximizer found,
        tables in ascending order then orders in lexicographic order.
    """
    if n > max_n and not force:
        raise BudgetExceeded(f"order scan of dimension {n} exceeds the cap n <= {max_n}")
    best = (-1, None, None)
    orders = [UpdateOrder(p) for p in itertools.permutations(range(1, n + 1))]
    for table in range(1 << (1 << n)):
        for order in orders:
            count = phase_space(SdsDefinition.complete(n, table, order)).census.get(2, 0)
            if count > best[0]:
                best = (count, table, order)
    return best
