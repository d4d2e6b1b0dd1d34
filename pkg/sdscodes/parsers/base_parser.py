#!/usr/bin/env python3

import os
import re
from collections import OrderedDict

from ..errors import FileFormatError


class BaseParser(object):
    """
    Generic class used to parse line-oriented text files (code files, edge
    lists) only using regular expressions. Blank lines and lines starting with
    ``#`` are ignored; every other line must match one of the rules.
    """
    comment = re.compile(r"^\s*(#.*)?$")

    def __init__(self, filename, section=None):
        # define a default section name for debugging
        if section is None:
            section = type(self).__name__
        self.section        = section
        self.filename       = filename
        # every parsed value is appended to the list of its rule key
        self.results        = OrderedDict()
        self._regex_rules   = []

    def __str__(self):
        """Print the number of values caught by each rule using the INI format."""
        results = '\n'.join([f"{k} = {len(v)}" for k, v in self.results.items()])
        return f"[{self.section.upper()}]\n{results}"

    def add_regex_rule(self, regex, keyname):
        """
        Catch the groups of the regex and append them to the 'results'
        attribute under their associated key. All rules are tried in order when
        the 'parse' method is executed, the first matching rule wins.
        """
        self._regex_rules.append({
            'key'   : keyname,
            'regex' : re.compile(regex),
        })
        self.results.setdefault(keyname, [])

    def parse_lines(self, lines):
        """Apply the rules to an iterable of lines.

        Raises:
            FileFormatError: a line matches no rule.
        """
        for lineno, line in enumerate(lines, start=1):
            line = line.strip()
            if self.comment.match(line):
                continue
            for rule in self._regex_rules:
                m = rule['regex'].match(line)
                if m:
                    groups = m.groups()
                    self.results[rule['key']].append(groups[0] if len(groups) == 1 else groups)
                    break
            else:
                raise FileFormatError(f"{self.filename}:{lineno}: unexpected line '{line}'")
        return self

    def parse(self):
        """Parse 'filename' line per line.

        Raises:
            FileFormatError: the file does not exist or a line matches no rule.
        """
        if not os.path.isfile(self.filename):
            raise FileFormatError(f"'{self.filename}' not found")
        with open(self.filename, 'r') as fp:
            return self.parse_lines(fp.readlines())
