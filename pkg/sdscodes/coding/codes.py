#!/usr/bin/env python3

"""
Binary codes: Hamming distance, minimum distance, Hamming codes, the
correspondence between codes of minimum distance 3 and cliques of ``J(n)``, and
the reference values of ``A(n, 3)`` known in closed form.

>>> code = hamming_code(3)
>>> len(code), min_distance(code)
(16, 3)
>>> a_n3_reference(7)
(16, 'formula')
"""

import math
import logging

import numpy as np

from ..errors import DimensionError
from ..dynamics.state import SystemState, as_state, check_length

logger = logging.getLogger(__name__)

INFINITY = math.inf

# popcount of every byte value
_POPCOUNT8 = np.unpackbits(np.arange(256, dtype=np.uint8)[:, None], axis=1).sum(axis=1)


class Code(object):
    """Set of distinct binary words of a common length.

    Attributes:
        length (int): word length.
        words  (tuple): ``SystemState`` words in ascending encoding order.

    Raises:
        DimensionError: words of different lengths.
    """

    def __init__(self, words, length=None):
        words = [as_state(w) for w in words]
        if length is None:
            if not words:
                raise DimensionError("the length of an empty code must be given")
            length = len(words[0])
        for w in words:
            check_length(w, length)
        self.length = length
        self.words  = tuple(sorted(set(words), key=lambda w: w.value))

    @classmethod
    def from_values(cls, values, length):
        """Build from canonical integer encodings."""
        return cls((SystemState.from_int(int(v), length) for v in values), length)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word):
        return as_state(word) in set(self.words)

    def __eq__(self, other):
        return isinstance(other, Code) and (self.length, self.words) == (other.length, other.words)

    def __hash__(self):
        return hash((self.length, self.words))

    def __repr__(self):
        return f"Code(length={self.length}, size={len(self)})"

    @property
    def values(self):
        return [w.value for w in self.words]

    @property
    def labels(self):
        return [w.label for w in self.words]


def hamming_distance(x, y):
    """Number of coordinates where ``x`` and ``y`` differ."""
    x, y = as_state(x), as_state(y)
    check_length(y, len(x))
    return sum(a != b for a, b in zip(x, y))


def min_distance(code):
    """Least pairwise Hamming distance, ``INFINITY`` for a single word.

    Raises:
        DimensionError: empty code.
    """
    if len(code) == 0:
        raise DimensionError("the minimum distance of an empty code is undefined")
    if len(code) == 1:
        return INFINITY
    if code.length > 64:
        return min(hamming_distance(x, y) for k, x in enumerate(code.words)
                   for y in code.words[k + 1:])
    values = np.array(code.values, dtype=np.uint64)
    best = code.length
    for k in range(values.size - 1):
        diff = values[k + 1:] ^ values[k]
        weights = _POPCOUNT8[diff.view(np.uint8).reshape(-1, 8)].sum(axis=1)
        best = min(best, int(weights.min()))
    return best


def distance_to_json(distance):
    """``"inf"`` for ``INFINITY``, the integer otherwise."""
    return "inf" if distance == INFINITY else int(distance)


def hamming_code(r):
    """Hamming code of length ``n = 2^r - 1``.

    The code is the kernel of the ``r x n`` parity-check matrix whose column
    ``j`` is the binary expansion of ``j``. It has ``2^(n - r)`` words and
    minimum distance 3.
    """
    if r < 2:
        raise DimensionError(f"Hamming codes need r >= 2, got {r}")
    n = (1 << r) - 1
    basis = []
    for j in range(1, n + 1):
        if j & (j - 1) == 0:
            continue
        # data position j, fixed by the check positions 2^i of the bits of j
        word = 1 << (n - j)
        for i in range(r):
            if (j >> i) & 1:
                word |= 1 << (n - (1 << i))
        basis.append(word)
    words = np.zeros(1, dtype=np.int64)
    for b in basis:
        words = np.concatenate([words, words ^ b])
    logger.debug("Hamming code r=%d: length %d, %d words", r, n, words.size)
    return Code.from_values(np.sort(words), n)


def code_to_clique(code):
    """Vertices of ``J(code.length)`` encoding the words."""
    return code.values


def clique_to_code(vertices, length):
    """Words encoded by vertices of ``J(length)``."""
    return Code.from_values(vertices, length)


def a_n3_reference(n):
    """Closed-form value of ``A(n, 3)`` when one is known.

    Returns:
        :obj:`tuple`: ``(value, tag)`` with tag ``"formula"`` when ``n + 1`` is
        a power of 2, ``"degenerate"`` for ``n <= 2``, ``(None, None)``
        otherwise.
    """
    if n < 1:
        raise DimensionError(f"A(n, 3) needs n >= 1, got {n}")
    if (n + 1) & n == 0:
        return 1 << (n - (n + 1).bit_length() + 1), "formula"
    if n <= 2:
        return 1, "degenerate"
    return None, None
