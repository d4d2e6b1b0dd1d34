#!/usr/bin/env python3

import os
import re

from sdscodes.utils import ProjectEnv

DOCS_PATH = os.path.join(ProjectEnv.project_path, "docs")


def test_documentation_requirements_are_used():
    with open(os.path.join(DOCS_PATH, "source", "conf.py")) as fp:
        conf = fp.read()
    with open(os.path.join(DOCS_PATH, "requirements.txt")) as fp:
        requirements = [re.split(r"[<>=]", line.strip())[0] for line in fp
                        if line.strip() and not line.startswith("#")]
    for requirement in requirements:
        if requirement.lower() == "sphinx":
            continue
        assert requirement.replace("-", "_") in conf, requirement
