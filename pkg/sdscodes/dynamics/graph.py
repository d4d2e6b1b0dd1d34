#!/usr/bin/env python3

import networkx as nx

from ..errors import DimensionError


class BaseGraph(object):
    """Undirected simple graph on the vertices ``1..n``.

    Attributes:
        n     (int): number of vertices.
        edges (frozenset): unordered pairs ``(i, j)`` stored with ``i < j``.

    Args:
        n     (int): number of vertices.
        edges (iterable): pairs of 1-based vertex indices.
    """

    def __init__(self, n, edges=()):
        if n < 1:
            raise DimensionError(f"a base graph needs at least one vertex, got {n}")
        self.n      = n
        pairs       = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise DimensionError(f"self-loop on vertex {i}")
            for v in (i, j):
                self._check_vertex(v)
            pairs.add((min(i, j), max(i, j)))
        self.edges  = frozenset(pairs)
        self._adj   = {v: [] for v in range(1, n + 1)}
        for i, j in sorted(self.edges):
            self._adj[i].append(j)
            self._adj[j].append(i)
        for v in self._adj:
            self._adj[v].sort()

    @classmethod
    def complete(cls, n):
        """Complete graph ``K_n``."""
        return cls(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    def __repr__(self):
        return f"BaseGraph(n={self.n}, edges={sorted(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, BaseGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def _check_vertex(self, v):
        if not 1 <= v <= self.n:
            raise DimensionError(f"vertex {v} out of range 1..{self.n}")

    def neighbors(self, v):
        """Neighbors of ``v`` in ascending index order."""
        self._check_vertex(v)
        return list(self._adj[v])

    def degree(self, v):
        self._check_vertex(v)
        return len(self._adj[v])

    def closed_neighborhood(self, v):
        """Indices forming ``X(v)``: the neighbors and ``v`` itself, ascending."""
        return sorted(self.neighbors(v) + [v])

    def is_complete(self):
        return len(self.edges) == self.n * (self.n - 1) // 2

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g
