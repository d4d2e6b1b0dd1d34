#!/usr/bin/env python3

"""
Reader of SDS definition files (JSON)::

    {"n": 4, "edges": [[1, 2], ...], "order": [2, 4, 1, 3],
     "functions": [{"vertex": 1, "table": "0101101001101001"}, ...]}

A function may be given by a ``polynomial`` over F_2 instead of, or next to,
its ``table``; when both are present they must agree. Vertices are 1-based.
"""

import os
import json

from ..errors import DimensionError, FileFormatError
from ..dynamics.graph import BaseGraph
from ..dynamics.sds import SdsDefinition
from ..dynamics.vertex_function import VertexFunction


def _function(entry, arity):
    table, polynomial = entry.get("table"), entry.get("polynomial")
    if table is None and polynomial is None:
        raise FileFormatError(f"vertex {entry.get('vertex')}: neither 'table' nor 'polynomial'")
    f = VertexFunction.from_bitstring(table) if table is not None else None
    if polynomial is not None:
        compiled = VertexFunction.from_polynomial(polynomial, arity)
        if f is not None and f != compiled:
            raise FileFormatError(
                f"vertex {entry.get('vertex')}: table '{table}' and polynomial "
                f"'{polynomial}' disagree ('{compiled.bitstring}')")
        f = compiled
    return f


def parse_sds(data):
    """Build an ``SdsDefinition`` from the decoded JSON object.

    Raises:
        FileFormatError: missing or malformed fields.
    """
    try:
        n = int(data["n"])
        graph = BaseGraph(n, data.get("edges", []))
        entries = {int(e["vertex"]): e for e in data["functions"]}
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, DimensionError):
            raise FileFormatError(str(e)) from None
        raise FileFormatError(f"malformed SDS definition: {e!r}") from None
    if sorted(entries) != list(range(1, n + 1)):
        raise FileFormatError(f"functions must be given for the vertices 1..{n}, got {sorted(entries)}")
    functions = [_function(entries[v], graph.degree(v) + 1) for v in range(1, n + 1)]
    try:
        return SdsDefinition(graph, functions, data.get("order"))
    except DimensionError as e:
        raise FileFormatError(str(e)) from None


def read_sds(filename):
    """Read an SDS definition file."""
    if not os.path.isfile(filename):
        raise FileFormatError(f"'{filename}' not found")
    with open(filename, "r") as fp:
        try:
            data = json.load(fp)
        except json.JSONDecodeError as e:
            raise FileFormatError(f"'{filename}': {e}") from None
    return parse_sds(data)
