#!/usr/bin/env python3

"""
Writer of SDS definition files, the counterpart of ``parsers.sds_parser``.
"""

import json


def sds_document(sds):
    """JSON-ready description of ``sds`` with 1-based vertices."""
    return {
        "n"         : sds.n,
        "edges"     : [list(e) for e in sorted(sds.graph.edges)],
        "order"     : list(sds.order),
        "functions" : [{"vertex": v, "table": f.bitstring}
                       for v, f in enumerate(sds.functions, start=1)],
    }


def write_sds(sds, filename):
    with open(filename, "w") as fp:
        json.dump(sds_document(sds), fp, indent=2)
        fp.write("\n")
