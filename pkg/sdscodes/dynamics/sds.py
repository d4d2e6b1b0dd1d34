#!/usr/bin/env python3

"""
Sequential dynamical systems ``[Y, (f_v), pi]``.

A system is a base graph ``Y`` on the vertices ``1..n``, one vertex function
per vertex and an update order. Updating vertex ``v_i`` rewrites coordinate
``i`` with ``f_{v_i}(X(v_i))`` where ``X(v_i)`` lists the states of ``v_i`` and
of its neighbors by ascending vertex index. The system map ``F`` applies the
local updates one after the other, in update order.

>>> sds = SdsDefinition.complete(2, "1010")
>>> sds_map(sds, "00").label
'11'
"""

import logging
import numpy as np

from ..errors import DimensionError
from .graph import BaseGraph
from .state import SystemState, as_state, check_length
from .vertex_function import VertexFunction

logger = logging.getLogger(__name__)


class UpdateOrder(tuple):
    """Permutation of ``1..n`` written in one-line notation."""

    def __new__(cls, pi):
        pi = tuple(int(v) for v in pi)
        if sorted(pi) != list(range(1, len(pi) + 1)):
            raise DimensionError(f"{list(pi)} is not a permutation of 1..{len(pi)}")
        return super().__new__(cls, pi)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_label(cls, label):
        """Parse ``"2413"`` or ``"2,4,1,3"``."""
        label = label.strip()
        parts = label.split(",") if "," in label else list(label)
        try:
            return cls(int(p) for p in parts)
        except ValueError:
            raise DimensionError(f"'{label}' is not an update order") from None

    @property
    def n(self):
        return len(self)

    def is_identity(self):
        return all(v == k + 1 for k, v in enumerate(self))

    def __str__(self):
        sep = "," if len(self) > 9 else ""
        return sep.join(str(v) for v in self)


class SdsDefinition(object):
    """Base graph, vertex functions and update order of a system.

    Attributes:
        graph     (BaseGraph): the base graph ``Y``.
        functions (tuple): ``functions[i - 1]`` is the function of ``v_i``.
        order     (UpdateOrder): the update order.

    Raises:
        DimensionError: when a function arity differs from ``d(v_i) + 1`` or
            the order does not permute the graph vertices.
    """

    def __init__(self, graph, functions, order=None):
        functions = tuple(functions)
        order = UpdateOrder.identity(graph.n) if order is None else UpdateOrder(order)
        if len(functions) != graph.n:
            raise DimensionError(f"{len(functions)} vertex functions for {graph.n} vertices")
        if order.n != graph.n:
            raise DimensionError(f"update order of length {order.n} for {graph.n} vertices")
        for v, f in enumerate(functions, start=1):
            if f.arity != graph.degree(v) + 1:
                raise DimensionError(
                    f"vertex {v} has degree {graph.degree(v)} but its function has arity {f.arity}")
        self.graph      = graph
        self.functions  = functions
        self.order      = order
        self._profiles  = {v: graph.closed_neighborhood(v) for v in range(1, graph.n + 1)}

    @classmethod
    def complete(cls, n, function, order=None):
        """Symmetric system ``[K_n, f, pi]`` where every vertex uses ``f``.

        Args:
            n        (int): number of vertices.
            function (VertexFunction, int or str): ``f`` as an object, an
                integer table or a bit-string of length ``2^n``.
            order    (sequence, optional): update order, identity by default.
        """
        if isinstance(function, str):
            function = VertexFunction.from_bitstring(function)
        elif not isinstance(function, VertexFunction):
            function = VertexFunction(n, function)
        return cls(BaseGraph.complete(n), [function] * n, order)

    @property
    def n(self):
        return self.graph.n

    def function(self, v):
        self.graph._check_vertex(v)
        return self.functions[v - 1]

    def is_symmetric_complete(self):
        """True for ``[K_n, f, id]`` with a single shared ``f``."""
        return self.graph.is_complete() and self.order.is_identity() \
            and len(set(self.functions)) == 1

    def __repr__(self):
        return f"SdsDefinition(n={self.n}, order={self.order})"


def _vertex_index(sds, i):
    if not 1 <= i <= sds.n:
        raise DimensionError(f"vertex index {i} out of range 1..{sds.n}")


def neighbor_profile(sds, state, i):
    """Return ``X(v_i)``: the states of ``v_i`` and its neighbors by ascending index."""
    state = as_state(state)
    check_length(state, sds.n)
    _vertex_index(sds, i)
    return tuple(state[j - 1] for j in sds._profiles[i])


def local_update(sds, state, i):
    """Apply ``L_{v_i}``: only coordinate ``i`` may change."""
    state = as_state(state)
    profile = neighbor_profile(sds, state, i)
    bits = list(state)
    bits[i - 1] = sds.functions[i - 1](profile)
    return SystemState(bits)


def intermediate_map(sds, state, k):
    """Apply ``G_k``, the first ``k`` local updates of the update order.

    ``G_0`` is the identity and ``G_n`` is the system map.
    """
    if not 0 <= k <= sds.n:
        raise DimensionError(f"step {k} out of range 0..{sds.n}")
    state = as_state(state)
    check_length(state, sds.n)
    for v in sds.order[:k]:
        state = local_update(sds, state, v)
    return state


def trajectory(sds, state):
    """States ``G_0(x), G_1(x), ..., G_n(x)`` of one system update."""
    state = as_state(state)
    check_length(state, sds.n)
    states = [state]
    for v in sds.order:
        states.append(local_update(sds, states[-1], v))
    return states


def sds_map(sds, state):
    """System map ``F = G_n``."""
    return intermediate_map(sds, state, sds.n)


def sds_map_array(sds, states):
    """Evaluate ``F`` on an array of encoded states.

    Args:
        sds    (SdsDefinition): the system.
        states (array-like): canonical integer encodings.

    Returns:
        :obj:`numpy.ndarray`: ``int64`` encodings of the images, same shape.
    """
    n = sds.n
    x = np.array(states, dtype=np.int64, copy=True)
    for i in sds.order:
        profile = sds._profiles[i]
        arity = len(profile)
        index = np.zeros_like(x)
        for pos, j in enumerate(profile):
            index |= ((x >> (n - j)) & 1) << (arity - 1 - pos)
        new = sds.functions[i - 1].values[index].astype(np.int64)
        shift = n - i
        x = (x & ~np.int64(1 << shift)) | (new << shift)
    return x


def is_two_periodic(sds, state):
    """True when ``state`` lies on a 2-cycle: ``F(F(x)) = x`` and ``F(x) != x``."""
    image = sds_map(sds, state)
    return image != as_state(state) and sds_map(sds, image) == as_state(state)
