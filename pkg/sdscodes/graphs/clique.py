#!/usr/bin/env python3

"""
Exact maximum clique search on ``ExplicitGraph`` bitset rows.

The solver is a branch and bound in the style of the bit-parallel BBMC
algorithms: vertices are renumbered once by descending degree, candidate sets
are Python integers, and each node is bounded by a greedy coloring of its
candidates. Word graphs are vertex-transitive, so a maximum clique containing
the zero vector always exists and the search is started from it.

>>> from sdscodes.graphs.word_graph import ImplicitGraphSpec, materialize
>>> result = max_clique(materialize(ImplicitGraphSpec.parse("J:5")))
>>> result.size, result.optimal
(4, True)
"""

import time
import logging
import itertools

from ..errors import DimensionError, InvalidCliqueError
from ..utils import setting, natural_delta

logger = logging.getLogger(__name__)

# the time budget is checked once every CHECK_EVERY search nodes
CHECK_EVERY = 1024
BRUTE_FORCE_MAX_VERTICES = 20


class CliqueResult(object):
    """Outcome of a clique search.

    Attributes:
        vertices       (list): clique members (labels), ascending.
        size           (int): number of members.
        optimal        (bool): ``size`` is proven to be the clique number.
        upper_bound    (int): proven upper bound on the clique number.
        nodes_explored (int): branch and bound nodes visited.
        seconds        (float): wall-clock search time, not serialized.
    """

    def __init__(self, vertices, optimal, upper_bound, nodes_explored=0, seconds=0.0):
        self.vertices       = sorted(vertices)
        self.size           = len(self.vertices)
        self.optimal        = optimal
        self.upper_bound    = upper_bound
        self.nodes_explored = nodes_explored
        self.seconds        = seconds

    def __repr__(self):
        return f"CliqueResult(size={self.size}, optimal={self.optimal}, " \
               f"upper_bound={self.upper_bound}, nodes={self.nodes_explored})"

    def to_dict(self, graph=None):
        """JSON-ready report; vertices as bit-strings when ``graph`` is given."""
        vertices = [graph.label(v) for v in self.vertices] if graph else list(self.vertices)
        return {
            "vertices"      : vertices,
            "size"          : self.size,
            "optimal"       : self.optimal,
            "upper_bound"   : self.upper_bound,
            "nodes_explored": self.nodes_explored,
        }


class _Stop(Exception):
    pass


def _lowest(bits):
    return (bits & -bits).bit_length() - 1


def _members(bits):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def is_clique(g, s):
    """True iff the labels in ``s`` are pairwise adjacent in ``g``.

    Raises:
        DimensionError: a label is not a vertex of ``g``.
    """
    positions = [g.position(v) for v in s]
    members = 0
    for p in positions:
        members |= 1 << p
    return all((g.rows[p] | (1 << p)) & members == members for p in positions)


def _degree_order(g):
    degrees = [bin(row).count("1") for row in g.rows]
    return sorted(range(len(g)), key=lambda p: (-degrees[p], g.labels[p]))


def _color_classes(rows, candidates):
    """Greedy sequential coloring in ascending index order.

    Returns the vertices in coloring order and the color of each, colors
    being non-decreasing along the list.
    """
    order, colors = [], []
    color, uncolored = 0, candidates
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = _lowest(available)
            available &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def _color_count(rows, candidates):
    colors = _color_classes(rows, candidates)[1]
    return colors[-1] if colors else 0


def greedy_lower_bound(g, seed=None):
    """Greedy clique: extend ``seed`` with vertices by descending degree.

    Returns:
        :obj:`CliqueResult`: non-optimal result whose upper bound is the
        number of vertices.
    """
    clique = list(seed or [])
    if not is_clique(g, clique):
        raise InvalidCliqueError(f"seed {sorted(clique)} is not a clique of {g.name}")
    candidates = (1 << len(g)) - 1
    for v in clique:
        p = g.position(v)
        candidates &= g.rows[p]
    for p in _degree_order(g):
        if (candidates >> p) & 1:
            clique.append(g.labels[p])
            candidates &= g.rows[p]
    return CliqueResult(clique, optimal=False, upper_bound=len(g))


def coloring_upper_bound(g):
    """Number of colors of a greedy coloring by descending degree."""
    order = _degree_order(g)
    rank = {p: r for r, p in enumerate(order)}
    rows = [_renumber(g.rows[p], rank) for p in order]
    return _color_count(rows, (1 << len(g)) - 1)


def _renumber(row, rank):
    out = 0
    for p in _members(row):
        out |= 1 << rank[p]
    return out


class _Search(object):
    """State of one branch and bound run on renumbered rows."""

    def __init__(self, rows, best, max_nodes, max_seconds):
        self.rows           = rows
        self.best           = list(best)
        self.nodes          = 0
        self.max_nodes      = max_nodes
        self.max_seconds    = max_seconds
        self.start          = time.time()
        self.progress_every = int(setting("clique.progress_every", 200000) or 0)

    def _tick(self):
        self.nodes += 1
        if self.progress_every and self.nodes % self.progress_every == 0:
            logger.info("clique search: %d nodes, incumbent %d, elapsed %s",
                        self.nodes, len(self.best), natural_delta(time.time() - self.start))
        if self.max_nodes and self.nodes > self.max_nodes:
            raise _Stop()
        if self.max_seconds and self.nodes % CHECK_EVERY == 0 \
                and time.time() - self.start >= self.max_seconds:
            raise _Stop()

    def expand(self, clique, candidates):
        self._tick()
        order, colors = _color_classes(self.rows, candidates)
        for k in range(len(order) - 1, -1, -1):
            if len(clique) + colors[k] <= len(self.best):
                return
            v = order[k]
            clique.append(v)
            inner = candidates & self.rows[v]
            if inner:
                self.expand(clique, inner)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            candidates &= ~(1 << v)


def max_clique(g, max_nodes=None, max_seconds=None, seed=None, use_symmetry=True):
    """Maximum clique of ``g``.

    Args:
        g            (ExplicitGraph): graph to search.
        max_nodes    (int, optional): node budget, ``clique.max_nodes``
            setting by default; 0 means unlimited.
        max_seconds  (float, optional): time budget, ``clique.max_seconds``
            setting by default; 0 means unlimited.
        seed         (iterable, optional): a known clique used as incumbent.
        use_symmetry (bool): on vertex-transitive graphs, search only the
            cliques containing vertex 0.

    Returns:
        :obj:`CliqueResult`: ``optimal`` is set only when the search space was
        exhausted; otherwise ``upper_bound`` is the root coloring bound.

    Raises:
        InvalidCliqueError: ``seed`` is not a clique.
    """
    if max_nodes is None:
        max_nodes = int(setting("clique.max_nodes", 0) or 0)
    if max_seconds is None:
        max_seconds = float(setting("clique.max_seconds", 0) or 0)
    start = time.time()
    if len(g) == 0:
        return CliqueResult([], optimal=True, upper_bound=0)
    symmetric = use_symmetry and g.vertex_transitive
    seed = list(seed or [])
    if seed and not is_clique(g, seed):
        raise InvalidCliqueError(f"seed {sorted(seed)} is not a clique of {g.name}")
    if symmetric and seed and 0 not in seed:
        # translating by a member keeps a clique of a Cayley graph
        seed = [v ^ seed[0] for v in seed]
    incumbent = greedy_lower_bound(g, seed).vertices
    order = _degree_order(g)
    rank = {p: r for r, p in enumerate(order)}
    rows = [_renumber(g.rows[p], rank) for p in order]
    best = [rank[g.position(v)] for v in incumbent]
    search = _Search(rows, best, max_nodes, max_seconds)
    if symmetric:
        root = rank[g.position(0)]
        root_bound = 1 + _color_count(rows, rows[root])
    else:
        root_bound = _color_count(rows, (1 << len(g)) - 1)
    optimal = True
    try:
        if symmetric:
            if rows[root] and len(search.best) < root_bound:
                search.expand([root], rows[root])
        elif len(search.best) < root_bound:
            search.expand([], (1 << len(g)) - 1)
    except _Stop:
        optimal = False
        logger.warning("%s: clique search budget exhausted after %d nodes, incumbent %d, bound %d",
                       g.name, search.nodes, len(search.best), root_bound)
    members = [g.labels[order[r]] for r in search.best]
    seconds = time.time() - start
    upper = len(members) if optimal else max(root_bound, len(members))
    logger.debug("%s: clique of size %d (optimal=%s) after %d nodes in %s",
                 g.name, len(members), optimal, search.nodes, natural_delta(seconds))
    return CliqueResult(members, optimal, upper, search.nodes, seconds)


def brute_force_clique_number(g):
    """Clique number by enumeration of vertex subsets (at most 20 vertices)."""
    if len(g) > BRUTE_FORCE_MAX_VERTICES:
        raise DimensionError(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {len(g)}")
    for size in range(len(g), 0, -1):
        for subset in itertools.combinations(g.labels, size):
            if is_clique(g, subset):
                return size
    return 0
