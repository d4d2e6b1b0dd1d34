#!/usr/bin/env python3

"""
Update functions built from cliques of ``HatH(n)``.

For each member ``a = (a_1, ..., a_n)`` of the clique and each
``l in {0, ..., n-1}`` two inputs are prescribed:

* ``(~a_1, ..., ~a_l, a_{l+1}, ..., a_n)`` maps to ``~a_{l+1}``,
* ``(a_1, ..., a_l, ~a_{l+1}, ..., ~a_n)`` maps to ``a_{l+1}``,

and every other input maps to 0. Under ``[K_n, f, id]`` each member is then
sent to its complement and back, so the clique yields as many 2-cycles.

>>> f = construct_update_function(HatClique(4, ["0000"]))
>>> f.bitstring
'1000000010001010'
"""

import logging

from ..errors import InvalidCliqueError, PrescriptionConflict, PreconditionError, \
    IncompatibilityViolation
from ..dynamics.state import SystemState, as_state, check_length
from ..dynamics.sds import SdsDefinition, is_two_periodic
from ..dynamics.vertex_function import VertexFunction
from ..graphs.word_graph import ImplicitGraphSpec, adjacent

logger = logging.getLogger(__name__)


class HatClique(object):
    """Clique of ``HatH(n)``: distinct vectors starting with 0, pairwise adjacent.

    Attributes:
        n       (int): dimension.
        members (tuple): ``SystemState`` members in the given order.

    Args:
        n        (int): dimension.
        members  (iterable): vectors, labels or bit sequences.
        validate (bool): check the clique invariants.

    Raises:
        InvalidCliqueError: a member is malformed or two members are not
            adjacent.
    """

    def __init__(self, n, members, validate=True):
        self.n       = n
        self.members = tuple(as_state(m) for m in members)
        if validate:
            self.validate()

    @classmethod
    def from_values(cls, n, values, validate=True):
        return cls(n, (SystemState.from_int(int(v), n) for v in values), validate)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"HatClique(n={self.n}, members={[m.label for m in self.members]})"

    def validate(self):
        spec = ImplicitGraphSpec("HatH", self.n)
        if len(set(self.members)) != len(self.members):
            raise InvalidCliqueError("clique members must be distinct")
        for m in self.members:
            if len(m) != self.n or m[0] != 0:
                raise InvalidCliqueError(f"'{m}' is not a vertex of {spec}")
        for k, x in enumerate(self.members):
            for y in self.members[k + 1:]:
                if not adjacent(spec, x, y):
                    raise InvalidCliqueError(f"'{x}' and '{y}' are not adjacent in {spec}")


class SymmetricUpdateFunction(VertexFunction):
    """Function ``F_2^n -> F_2`` shared by all vertices of ``K_n``.

    Attributes:
        n          (int): arity.
        prescribed (int): bit ``k`` set when input ``k`` was set by a
            prescription rule; other inputs are 0 by default.
    """

    def __init__(self, n, table, prescribed=0):
        super().__init__(n, table)
        self.prescribed = prescribed

    @property
    def n(self):
        return self.arity

    def system(self, order=None):
        """``[K_n, f, order]``."""
        return SdsDefinition.complete(self.n, self, order)


def prescriptions(member):
    """Yield the ``(input, value)`` pairs prescribed by one member, as integers."""
    n = len(member)
    a = member.value
    full = (1 << n) - 1
    for l in range(n):
        bit = (a >> (n - l - 1)) & 1
        prefix = full ^ ((1 << (n - l)) - 1)
        yield a ^ prefix, 1 - bit
        yield a ^ ((1 << (n - l)) - 1), bit


def construct_update_function(clique):
    """Build the update function of a ``HatClique``.

    Identical prescriptions of the same input are accepted; only
    disagreements are reported.

    Raises:
        PrescriptionConflict: two rules prescribe different values.
    """
    n = clique.n
    assigned = {}
    for member in clique.members:
        check_length(member, n)
        for index, value in prescriptions(member):
            previous = assigned.setdefault(index, value)
            if previous != value:
                state = SystemState.from_int(index, n)
                raise PrescriptionConflict(
                    f"input '{state}' prescribed both {previous} and {value}",
                    state=state, values=(previous, value))
    table = sum(1 << index for index, value in assigned.items() if value)
    prescribed = sum(1 << index for index in assigned)
    logger.debug("update function for %d members: %d prescribed inputs",
                 len(clique), len(assigned))
    return SymmetricUpdateFunction(n, table, prescribed)


def check_nonadjacent_pair(f, x, y):
    """Check that two nonadjacent ``HatH(n)`` vertices are not both 2-periodic.

    Args:
        f (VertexFunction): function of arity ``n`` used on every vertex of
            ``K_n`` with identity order.
        x, y: distinct nonadjacent vectors starting with 0.

    Returns:
        :obj:`dict`: labels of ``x`` and ``y`` and which of them is 2-periodic.

    Raises:
        PreconditionError: ``x`` and ``y`` are equal, adjacent or not vertices
            of ``HatH(n)``.
        IncompatibilityViolation: both are 2-periodic.
    """
    n = f.arity
    spec = ImplicitGraphSpec("HatH", n)
    x, y = as_state(x), as_state(y)
    for v in (x, y):
        if not spec.contains(v):
            raise PreconditionError(f"'{v}' is not a vertex of {spec}")
    if x == y:
        raise PreconditionError(f"'{x}' is given twice")
    if adjacent(spec, x, y):
        raise PreconditionError(f"'{x}' and '{y}' are adjacent in {spec}")
    sds = SdsDefinition.complete(n, f)
    report = {
        "x"         : x.label,
        "y"         : y.label,
        "x_periodic": is_two_periodic(sds, x),
        "y_periodic": is_two_periodic(sds, y),
    }
    if report["x_periodic"] and report["y_periodic"]:
        raise IncompatibilityViolation(f"'{x}' and '{y}' are both 2-periodic")
    return report
