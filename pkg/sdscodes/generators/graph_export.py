#!/usr/bin/env python3

"""
Render explicit graphs (materialized word graphs, edge lists) as Graphviz or
as ``u v`` edge lists with bit-string labels, and write code files.
"""

import os
from string import Template

from ..errors import DimensionError
from ..utils import ProjectEnv


def edge_list(graph):
    """One ``u v`` line per edge; isolated vertices get a line of their own."""
    lines = [f"# {graph.name}: {len(graph)} vertices, {graph.edge_count} edges"]
    touched = set()
    for u, v in graph.edges():
        touched.update((u, v))
        lines.append(f"{graph.label(u)} {graph.label(v)}")
    lines.extend(graph.label(v) for v in graph.labels if v not in touched)
    return "\n".join(lines) + "\n"


def _dot(graph):
    with open(os.path.join(ProjectEnv.templates_path, "word_graph.dot"), "r") as fp:
        template = Template(fp.read())
    return template.safe_substitute({
        "NAME"      : graph.name,
        "VERTICES"  : len(graph),
        "EDGE_COUNT": graph.edge_count,
        "NODES"     : "\n".join(f'    "{graph.label(v)}";' for v in graph.labels),
        "EDGES"     : "\n".join(f'    "{graph.label(u)}" -- "{graph.label(v)}";'
                                for u, v in graph.edges()),
    })


def export_graph(graph, format="edges"):
    """Render ``graph`` as ``dot`` or ``edges`` text."""
    if format == "dot":
        return _dot(graph)
    if format == "edges":
        return edge_list(graph)
    raise DimensionError(f"unknown graph format '{format}'")


def code_file(code, comment=None):
    """Code file text: one word per line, optional ``#`` header."""
    lines = [f"# {comment}"] if comment else []
    lines.extend(code.labels)
    return "\n".join(lines) + "\n"
