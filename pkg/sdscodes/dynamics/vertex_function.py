#!/usr/bin/env python3

"""
Boolean vertex functions stored as truth tables.

A function of arity ``a`` is a table of ``2^a`` bits. The argument tuple
``(y_1, ..., y_a)`` is turned into an index with ``y_1`` as the most
significant bit, and the value is bit ``k`` of the integer ``table``. The
bit-string form used by the file formats writes ``f(0), f(1), ...`` from left
to right:

>>> f = VertexFunction.from_polynomial("x1*x2 + 1", 2)
>>> f.bitstring
'1110'
>>> f((1, 1))
0
"""

import re
import numpy as np

from ..errors import DimensionError, FileFormatError

_MONOMIAL = re.compile(r"^x(\d+)$")


class VertexFunction(object):
    """Total map from F_2^arity to F_2.

    Attributes:
        arity (int): number of arguments.
        table (int): truth table, ``f(k) = (table >> k) & 1``.

    Args:
        arity (int): number of arguments.
        table (int): truth table as an integer below ``2^(2^arity)``.
    """

    def __init__(self, arity, table):
        if arity < 0:
            raise DimensionError(f"negative arity {arity}")
        if table < 0 or table >> (1 << arity):
            raise DimensionError(f"table {table} does not fit {1 << arity} entries")
        self.arity  = arity
        self.table  = int(table)
        self._values = None

    @classmethod
    def from_bitstring(cls, bits):
        """Read a table written as ``f(0) f(1) ... f(2^a - 1)`` without spaces."""
        bits = bits.strip()
        size = len(bits)
        if size == 0 or size & (size - 1) or set(bits) - {"0", "1"}:
            raise FileFormatError(f"'{bits}' is not a truth table bit-string")
        return cls.from_array(np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_array(cls, values):
        """Build from a 0/1 numpy array ``f(0), f(1), ...`` of power-of-2 length."""
        values = np.asarray(values, dtype=np.uint8)
        size = values.size
        if size == 0 or size & (size - 1):
            raise DimensionError(f"table of {size} entries is not a power of 2")
        packed = np.packbits(values, bitorder="little")
        return cls(size.bit_length() - 1, int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def from_values(cls, values):
        """Build from the sequence ``f(0), f(1), ...``."""
        return cls.from_bitstring(''.join(str(int(v)) for v in values))

    @classmethod
    def constant(cls, arity, value):
        return cls(arity, (1 << (1 << arity)) - 1 if value else 0)

    @classmethod
    def projection(cls, arity, position):
        """``f(y) = y_position`` (1-based)."""
        if not 1 <= position <= arity:
            raise DimensionError(f"projection on {position} out of range 1..{arity}")
        shift = arity - position
        return cls.from_array((np.arange(1 << arity) >> shift) & 1)

    @classmethod
    def from_polynomial(cls, expression, arity):
        """Compile an F_2 polynomial such as ``"x1*x3 + x2 + x4"``.

        Terms are separated by ``+`` and are products (``*``) of variables
        ``x1..x<arity>`` or the constants ``0`` and ``1``.

        Raises:
            FileFormatError: unknown token or variable index out of range.
        """
        monomials = []
        for term in expression.split("+"):
            term = term.strip()
            if not term:
                raise FileFormatError(f"empty term in polynomial '{expression}'")
            mask = 0
            for factor in term.split("*"):
                factor = factor.strip()
                if factor == "1":
                    continue
                if factor == "0":
                    mask = None
                    break
                m = _MONOMIAL.match(factor)
                if not m or not 1 <= int(m.group(1)) <= arity:
                    raise FileFormatError(f"bad factor '{factor}' in polynomial '{expression}'")
                mask |= 1 << (arity - int(m.group(1)))
            if mask is not None:
                monomials.append(mask)
        table = 0
        for k in range(1 << arity):
            value = 0
            for mask in monomials:
                value ^= int(k & mask == mask)
            table |= value << k
        return cls(arity, table)

    def __repr__(self):
        return f"VertexFunction(arity={self.arity}, table='{self.bitstring}')"

    def __eq__(self, other):
        return isinstance(other, VertexFunction) and \
            (self.arity, self.table) == (other.arity, other.table)

    def __hash__(self):
        return hash((self.arity, self.table))

    def __call__(self, args):
        if len(args) != self.arity:
            raise DimensionError(f"{len(args)} arguments given to a function of arity {self.arity}")
        index = 0
        for b in args:
            index = (index << 1) | int(b)
        return self.at(index)

    def at(self, index):
        """Value on the argument of canonical encoding ``index``."""
        return (self.table >> index) & 1

    @property
    def bitstring(self):
        return ''.join(str(self.at(k)) for k in range(1 << self.arity))

    @property
    def values(self):
        """Table as a read-only ``uint8`` numpy array of length ``2^arity``."""
        if self._values is None:
            size = 1 << self.arity
            raw = self.table.to_bytes(max(1, size // 8), "little")
            values = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]
            values.setflags(write=False)
            self._values = values
        return self._values
