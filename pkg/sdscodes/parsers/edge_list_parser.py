#!/usr/bin/env python3

"""
Reader of edge lists written as ``u v`` per line with bit-string labels, the
format produced by the graph exporter. A line holding a single label declares
an isolated vertex.
"""

from ..errors import FileFormatError
from ..graphs.word_graph import ExplicitGraph
from .base_parser import BaseParser


class EdgeListParser(BaseParser):
    """Parse an edge list into an ``ExplicitGraph``."""

    def __init__(self, filename):
        super().__init__(filename, section="edges")
        self.add_regex_rule(r"^([01]+)\s+([01]+)$", "edges")
        self.add_regex_rule(r"^([01]+)$", "vertices")

    @property
    def graph(self):
        edges = self.results["edges"]
        labels = set(self.results["vertices"])
        for u, v in edges:
            labels.update((u, v))
        if not labels:
            raise FileFormatError(f"'{self.filename}' holds no vertex")
        widths = {len(label) for label in labels}
        if len(widths) != 1:
            raise FileFormatError(f"'{self.filename}': labels of different lengths {sorted(widths)}")
        return ExplicitGraph.from_edges(
            [int(label, 2) for label in labels],
            [(int(u, 2), int(v, 2)) for u, v in edges],
            width=widths.pop(),
            name=self.filename,
        )


def read_edge_list(filename):
    return EdgeListParser(filename).parse().graph
