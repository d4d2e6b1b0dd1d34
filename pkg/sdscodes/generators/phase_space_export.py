#!/usr/bin/env python3

"""
Render a ``PhaseSpace`` as a Graphviz digraph or as a JSON document. States
are written as bit-strings (``1011`` for ``(1, 0, 1, 1)``).
"""

import os
import json
from string import Template

from ..errors import DimensionError
from ..utils import ProjectEnv


def phase_space_document(ps):
    """JSON-ready ``{n, edges, census, cycles}`` description of ``ps``."""
    return {
        "n"     : ps.n,
        "edges" : [[x.label, y.label] for x, y in ps.edges()],
        "census": {str(length): count for length, count in ps.census.items()},
        "cycles": [[s.label for s in cycle] for cycle in ps.cycles],
    }


def _dot(ps):
    with open(os.path.join(ProjectEnv.templates_path, "phase_space.dot"), "r") as fp:
        template = Template(fp.read())
    nodes = []
    for x, _ in ps.edges():
        style = ", fontcolor = red" if ps.periodic[x.value] else ""
        nodes.append(f'    "{x.label}" [label = "{x.label}"{style}];')
    edges = [f'    "{x.label}" -> "{y.label}";' for x, y in ps.edges()]
    census = ", ".join(f"{length}: {count}" for length, count in ps.census.items())
    return template.safe_substitute({
        "STATES": len(ps),
        "CENSUS": census or "none",
        "NODES" : "\n".join(nodes),
        "EDGES" : "\n".join(edges),
    })


def export_phase_space(ps, format="json"):
    """Render ``ps`` as ``dot`` or ``json`` text."""
    if format == "dot":
        return _dot(ps)
    if format == "json":
        return json.dumps(phase_space_document(ps), indent=2)
    raise DimensionError(f"unknown phase space format '{format}'")
