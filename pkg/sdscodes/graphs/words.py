#!/usr/bin/env python3

"""
Words over {0, 1}: scattered subsequence containment, the sets ``D_n(w)`` and
the linear maps relating the word graphs.

>>> contains_subsequence("10110", "100")
True
>>> prefix_sum_T("111").label
'101'
"""

from ..errors import DimensionError
from ..dynamics.state import SystemState, as_state, check_length


class PatternWord(str):
    """Nonempty word over {0, 1}."""

    def __new__(cls, letters):
        if isinstance(letters, str):
            letters = letters.strip()
        else:
            letters = ''.join(str(int(b)) for b in letters)
        if not letters or set(letters) - {"0", "1"}:
            raise DimensionError(f"'{letters}' is not a nonempty binary word")
        return super().__new__(cls, letters)


def _letters(x):
    if isinstance(x, str):
        return x
    return ''.join(str(int(b)) for b in x)


def contains_subsequence(x, w):
    """True iff ``w`` occurs in ``x`` as a scattered subsequence.

    Greedy left-to-right scan: each letter of ``x`` consumes the next pending
    letter of ``w`` when they are equal.
    """
    w = PatternWord(w)
    k = 0
    for c in _letters(x):
        if c == w[k]:
            k += 1
            if k == len(w):
                return True
    return False


def in_D(n, w, x):
    """Membership of ``x`` in ``D_n(w)``."""
    x = as_state(x)
    check_length(x, n)
    return contains_subsequence(x, w)


def theta(x):
    """Drop the first coordinate of a vector whose first coordinate is 0."""
    x = as_state(x)
    if not x or x[0] != 0:
        raise DimensionError(f"theta is defined on vectors starting with 0, got '{x}'")
    return SystemState(x[1:])


def theta_inverse(y):
    """Prepend a 0 coordinate."""
    return SystemState((0,) + tuple(as_state(y)))


def prefix_sum_T(x):
    """``T(x)_k = x_1 + ... + x_k`` over F_2."""
    out, acc = [], 0
    for b in as_state(x):
        acc ^= b
        out.append(acc)
    return SystemState(out)


def difference_map(y):
    """Inverse of ``prefix_sum_T``: ``(y_1, y_1 + y_2, y_2 + y_3, ...)``."""
    y = as_state(y)
    return SystemState(b ^ (y[k - 1] if k else 0) for k, b in enumerate(y))


def prefix_sum_int(value, n):
    """``prefix_sum_T`` on canonical encodings."""
    out, acc = 0, 0
    for k in range(n - 1, -1, -1):
        acc ^= (value >> k) & 1
        out = (out << 1) | acc
    return out


def difference_int(value):
    """``difference_map`` on canonical encodings."""
    return value ^ (value >> 1)
