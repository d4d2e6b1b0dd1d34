#!/usr/bin/env python3

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from sdscodes.utils import ProjectEnv
from sdscodes.parsers import read_sds

# successor map of the bundled four-vertex example, F(x) for x = 0..15
EXAMPLE1_SUCCESSORS = [14, 7, 12, 5, 14, 7, 12, 5, 14, 7, 15, 6, 0, 9, 1, 8]


@pytest.fixture(scope="session")
def example1():
    return read_sds(ProjectEnv.example1_file)


@pytest.fixture
def write_lines(tmp_path):
    """Write text lines in a temporary file and return its path."""
    def write(name, lines):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n")
        return str(path)
    return write
