#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .phase_space_export import export_phase_space, phase_space_document
from .graph_export import export_graph, edge_list, code_file
from .sds_export import sds_document, write_sds

__all__ = [
    "code_file",
    "edge_list",
    "export_graph",
    "export_phase_space",
    "phase_space_document",
    "sds_document",
    "write_sds",
]
