#!/usr/bin/env python3

"""
The word graphs ``HatH(n)``, ``H(m)`` and ``J(m)``.

Their vertices are binary vectors (first coordinate 0 for ``HatH``) and two
vertices are adjacent when their sum contains ``101`` (``HatH``, ``H``) or
``111`` (``J``) as a scattered subsequence. Graphs are described by an
``ImplicitGraphSpec`` and turned into an ``ExplicitGraph`` of bitset rows by
``materialize`` for the clique solver.

>>> spec = ImplicitGraphSpec.parse("J:3")
>>> g = materialize(spec)
>>> g.edge_count
4
"""

import time
import logging

import numpy as np
import networkx as nx

from ..errors import BudgetExceeded, DimensionError, FileFormatError
from ..utils import setting, natural_delta
from ..dynamics.state import SystemState, as_state, check_length, vector_sum
from .words import PatternWord, contains_subsequence

logger = logging.getLogger(__name__)

PATTERNS = {
    "HatH"  : "101",
    "H"     : "101",
    "J"     : "111",
}


class ImplicitGraphSpec(object):
    """Word graph given by its kind and dimension.

    Attributes:
        kind      (str): ``HatH``, ``H`` or ``J``.
        dimension (int): vector length.
    """

    def __init__(self, kind, dimension):
        if kind not in PATTERNS:
            raise DimensionError(f"unknown word graph '{kind}', expected one of {list(PATTERNS)}")
        if dimension < 1:
            raise DimensionError(f"word graph dimension must be positive, got {dimension}")
        self.kind       = kind
        self.dimension  = int(dimension)

    @classmethod
    def parse(cls, text):
        """Read ``"J:7"``, ``"H:6"`` or ``"HatH:8"``."""
        kind, sep, dim = text.strip().partition(":")
        if not sep or not dim.strip().isdigit():
            raise FileFormatError(f"'{text}' is not a graph spec such as 'J:7'")
        return cls(kind.strip(), int(dim))

    def __str__(self):
        return f"{self.kind}:{self.dimension}"

    def __repr__(self):
        return f"ImplicitGraphSpec('{self}')"

    def __eq__(self, other):
        return isinstance(other, ImplicitGraphSpec) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))

    @property
    def pattern(self):
        return PatternWord(PATTERNS[self.kind])

    @property
    def vertex_count(self):
        if self.kind == "HatH":
            return 1 << (self.dimension - 1)
        return 1 << self.dimension

    def contains(self, x):
        """Vertex-set membership of a vector."""
        x = as_state(x)
        if len(x) != self.dimension:
            return False
        return self.kind != "HatH" or x[0] == 0

    def vertices(self):
        """Vertices as ``SystemState`` in ascending encoding order."""
        for value in range(self.vertex_count):
            yield SystemState.from_int(value, self.dimension)


def adjacent(spec, x, y):
    """Adjacency in the word graph ``spec``.

    Raises:
        DimensionError: ``x`` or ``y`` is not a vertex of ``spec``.
    """
    x, y = as_state(x), as_state(y)
    for v in (x, y):
        check_length(v, spec.dimension)
        if not spec.contains(v):
            raise DimensionError(f"'{v}' is not a vertex of {spec}")
    return contains_subsequence(vector_sum(x, y), spec.pattern)


def difference_mask(spec):
    """Boolean array ``mask[d]``: the vector encoded by ``d`` contains the pattern.

    Only the ``vertex_count`` first entries are computed, which covers every
    sum of two vertices.
    """
    m = spec.dimension
    pattern = np.array([int(c) for c in spec.pattern], dtype=np.int64)
    d = np.arange(spec.vertex_count, dtype=np.int64)
    matched = np.zeros_like(d)
    for pos in range(m):
        bit = (d >> (m - 1 - pos)) & 1
        pending = matched < pattern.size
        expected = pattern[np.minimum(matched, pattern.size - 1)]
        matched += pending & (bit == expected)
    return matched == pattern.size


class ExplicitGraph(object):
    """Undirected graph with adjacency rows stored as Python integer bitsets.

    Bit ``j`` of ``rows[i]`` is set when the vertices at positions ``i`` and
    ``j`` are adjacent. Vertex labels are canonical integer encodings; for word
    graphs the position of a vertex is its label.

    Attributes:
        labels            (list): vertex labels by position.
        rows              (list): adjacency bitsets by position.
        width             (int): bit-string width of the labels.
        name              (str): description of the graph.
        vertex_transitive (bool): set for word graphs, which are Cayley graphs
            of a translation group.
    """

    def __init__(self, labels, rows, width=None, name="graph", vertex_transitive=False):
        self.labels             = list(labels)
        self.rows               = list(rows)
        self.width              = width or max(1, max(self.labels, default=0).bit_length())
        self.name               = name
        self.vertex_transitive  = vertex_transitive
        self._position          = {label: pos for pos, label in enumerate(self.labels)}
        if len(self._position) != len(self.labels):
            raise DimensionError(f"{name}: duplicate vertex labels")
        for pos, row in enumerate(self.rows):
            if (row >> pos) & 1:
                raise DimensionError(f"{name}: self-loop on vertex {self.labels[pos]}")

    @classmethod
    def from_edges(cls, labels, edges, width=None, name="graph"):
        """Build from vertex labels and label pairs."""
        labels = sorted(set(labels))
        position = {label: pos for pos, label in enumerate(labels)}
        rows = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise DimensionError(f"{name}: self-loop on vertex {u}")
            i, j = position[u], position[v]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(labels, rows, width=width, name=name)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"ExplicitGraph(name='{self.name}', vertices={len(self)}, edges={self.edge_count})"

    def position(self, label):
        try:
            return self._position[label]
        except KeyError:
            raise DimensionError(f"{self.name}: unknown vertex {label}") from None

    def has_edge(self, u, v):
        return bool((self.rows[self.position(u)] >> self.position(v)) & 1)

    def degree(self, label):
        return bin(self.rows[self.position(label)]).count("1")

    def neighbors(self, label):
        row = self.rows[self.position(label)]
        return [self.labels[j] for j in range(len(self)) if (row >> j) & 1]

    def edges(self):
        """Yield label pairs ``(u, v)`` with ``u`` before ``v``."""
        for i, row in enumerate(self.rows):
            row >>= i + 1
            j = i + 1
            while row:
                if row & 1:
                    yield self.labels[i], self.labels[j]
                row >>= 1
                j += 1

    @property
    def edge_count(self):
        return sum(bin(row).count("1") for row in self.rows) // 2

    def label(self, vertex):
        """Bit-string form of a vertex label."""
        return format(vertex, f"0{self.width}b")

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.labels)
        g.add_edges_from(self.edges())
        return g


def materialize(spec, max_dimension=None, force=False):
    """Build the explicit graph of ``spec``.

    Row ``x`` is ``mask[positions ^ x]``: ``x`` and ``y`` are adjacent iff
    their sum contains the pattern.

    Args:
        spec          (ImplicitGraphSpec): graph to build.
        max_dimension (int, optional): cap on ``spec.dimension``, the
            ``word_graph.max_dimension`` setting by default.
        force         (bool): ignore the cap.

    Raises:
        BudgetExceeded: dimension above the cap.
    """
    if max_dimension is None:
        max_dimension = int(setting("word_graph.max_dimension", 16))
    if spec.dimension > max_dimension and not force:
        raise BudgetExceeded(f"{spec} exceeds the materialization cap dimension <= {max_dimension}")
    start = time.time()
    size = spec.vertex_count
    mask = difference_mask(spec)
    positions = np.arange(size, dtype=np.int64)
    rows = []
    for x in range(size):
        packed = np.packbits(mask[positions ^ x], bitorder="little")
        rows.append(int.from_bytes(packed.tobytes(), "little"))
    graph = ExplicitGraph(range(size), rows, width=spec.dimension, name=str(spec),
                          vertex_transitive=True)
    logger.debug("%s materialized: %d vertices, %d edges in %s",
                 spec, size, graph.edge_count, natural_delta(time.time() - start))
    return graph
