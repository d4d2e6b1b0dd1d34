#!/usr/bin/env python3

"""
Binary vectors of F_2^n. A ``SystemState`` is a tuple of bits ``(x_1, ..., x_n)``
with the canonical integer encoding ``sum x_i * 2^(n-i)`` (``x_1`` is the most
significant bit) and the bit-string label used in every file format.

>>> x = SystemState.from_label("0001")
>>> x.value
1
>>> inv(x).label
'1110'
"""

from ..errors import DimensionError


class SystemState(tuple):
    """
    Immutable state vector over F_2, usable like a Python tuple.

    Attributes:
        n     (int): vector length.
        value (int): canonical integer encoding.
        label (str): bits written without separators, such as ``1011``.
    """
    def __new__(cls, bits=()):
        bits = tuple(int(b) for b in bits)
        for b in bits:
            if b not in (0, 1):
                raise DimensionError(f"'{b}' is not an element of F_2")
        return super().__new__(cls, bits)

    @classmethod
    def from_int(cls, value, n):
        """Decode the canonical integer encoding of a length-``n`` vector."""
        if value < 0 or value >> n:
            raise DimensionError(f"{value} does not encode a vector of length {n}")
        return cls((value >> (n - 1 - k)) & 1 for k in range(n))

    @classmethod
    def from_label(cls, label):
        """Build a state from a bit-string label (``"0101"``)."""
        label = label.strip()
        if not label or set(label) - {"0", "1"}:
            raise DimensionError(f"'{label}' is not a bit-string label")
        return cls(int(c) for c in label)

    @property
    def n(self):
        return len(self)

    @property
    def value(self):
        return encode(self)

    @property
    def label(self):
        return ''.join(str(b) for b in self)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"SystemState('{self.label}')"

    def __add__(self, other):
        """Coordinate-wise sum over F_2, not tuple concatenation."""
        return vector_sum(self, other)


def as_state(x):
    """Accept a ``SystemState``, a bit sequence or a bit-string label."""
    if isinstance(x, SystemState):
        return x
    if isinstance(x, str):
        return SystemState.from_label(x)
    return SystemState(x)


def encode(bits):
    """Canonical integer encoding, first coordinate most significant."""
    value = 0
    for b in bits:
        value = (value << 1) | int(b)
    return value


def check_length(x, n):
    if len(x) != n:
        raise DimensionError(f"vector '{as_state(x)}' has length {len(x)}, expected {n}")


def vector_sum(x, y):
    """Sum of two vectors over F_2."""
    check_length(y, len(x))
    return SystemState(a ^ b for a, b in zip(x, y))


def inv(x):
    """Coordinate-wise complement: ``inv(0001) = 1110``."""
    return SystemState(1 - b for b in as_state(x))


def all_states(n):
    """Iterate the ``2^n`` vectors of F_2^n in ascending encoding order."""
    for value in range(1 << n):
        yield SystemState.from_int(value, n)
