#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Line-oriented files
from .base_parser import BaseParser
from .code_parser import CodeFileParser, read_code
from .edge_list_parser import EdgeListParser, read_edge_list

# JSON definitions
from .sds_parser import parse_sds, read_sds

__all__ = [
    "BaseParser",
    "CodeFileParser",
    "EdgeListParser",
    "parse_sds",
    "read_code",
    "read_edge_list",
    "read_sds",
]
