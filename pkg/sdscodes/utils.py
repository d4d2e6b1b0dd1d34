#!/usr/bin/env python3

import sys
import logging
from os.path import abspath, dirname, join
from importlib import util

from envyaml import EnvYAML

if util.find_spec("coloredlogs"):
    import coloredlogs
if util.find_spec("humanize"):
    import humanize

LOG_FORMAT = "%(levelname)5s (%(name)s) - %(message)s"


class ProjectEnv:
    """
    Base directories, paths and files variables for this project, to facilitate
    absolute file manipulation.
    """
    package_path    = abspath(dirname(__file__))
    project_path    = abspath(join(package_path, ".."))
    config_path     = abspath(join(package_path, "config"))
    fixtures_path   = abspath(join(package_path, "fixtures"))
    schemas_path    = abspath(join(package_path, "schemas"))
    templates_path  = abspath(join(package_path, "templates"))
    settings_file   = abspath(join(config_path, "defaults.yml"))
    example1_file   = abspath(join(fixtures_path, "example1.json"))


_settings = None

def load_settings(filename=None):
    """Load the default budgets and caps (cached after the first call).

    Args:
        filename (str, optional): YAML file to read instead of the bundled
            ``config/defaults.yml``. Environment variables referenced in the
            file are expanded by *envyaml*.

    Returns:
        :obj:`EnvYAML`: settings object, accessed with dotted keys such as
        ``settings["phase_space.max_n"]``.
    """
    global _settings
    if filename is not None:
        return EnvYAML(filename, strict=False)
    if _settings is None:
        _settings = EnvYAML(ProjectEnv.settings_file, strict=False)
    return _settings


def setting(key, default=None):
    """Return a single value of the default settings."""
    value = load_settings().get(key, default)
    return default if value is None else value


def setup_logger(name="sdscodes", level=None):
    """Configure the package logger (colored when *coloredlogs* is found).

    Logs are written on the standard error so that JSON reports printed on the
    standard output stay machine-readable.
    """
    if level is None:
        level = setting("logging.level", "INFO")
    fmt = setting("logging.format", LOG_FORMAT)
    logger = logging.getLogger(name)
    # repeated calls (one per CLI run) must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    if "coloredlogs" in sys.modules:
        coloredlogs.install(level=level, logger=logger, stream=sys.stderr, fmt=fmt)
    else:
        logging.basicConfig(level=level, stream=sys.stderr, format=fmt)
        logger.setLevel(level)
    return logger


def natural_delta(seconds):
    """Human readable duration, used in progress and summary messages."""
    if "humanize" in sys.modules:
        return humanize.naturaldelta(seconds, minimum_unit="milliseconds")
    return f"{seconds:.2f} s"
