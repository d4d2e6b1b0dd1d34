#!/usr/bin/env python3

"""
Reader of code files: one word per line written as a 0/1 string. The length
is inferred from the first word; blank lines and ``#`` comments are ignored.

Usage::

    code = CodeFileParser("hamming7.txt").parse().code
"""

from ..errors import FileFormatError
from ..coding.codes import Code
from .base_parser import BaseParser


class CodeFileParser(BaseParser):
    """Parse a code file into a ``Code``.

    Attributes:
        code (Code): the parsed code, available after ``parse``.
    """

    def __init__(self, filename):
        super().__init__(filename, section="code")
        self.add_regex_rule(r"^([01]+)$", "words")

    @property
    def code(self):
        words = self.results["words"]
        if not words:
            raise FileFormatError(f"'{self.filename}' holds no codeword")
        length = len(words[0])
        for w in words:
            if len(w) != length:
                raise FileFormatError(
                    f"'{self.filename}': word '{w}' has length {len(w)}, expected {length}")
        if len(set(words)) != len(words):
            raise FileFormatError(f"'{self.filename}': repeated codewords")
        return Code(words, length)


def read_code(filename):
    return CodeFileParser(filename).parse().code
