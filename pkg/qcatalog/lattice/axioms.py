"""Axiom checks for orthocomplemented lattices, shared by the quantum and the classical lattice"""
from collections import namedtuple

from .classical import ClassicalEvent, c_complement, c_join, c_leq, c_meet
from .subspace import Subspace, join, leq, meet, orthocomplement

__all__ = [
    "LatticeOps",
    "SUBSPACE_OPS",
    "CLASSICAL_OPS",
    "orthocomplement_axioms",
    "de_morgan_holds",
]

LatticeOps = namedtuple("LatticeOps", ["leq", "meet", "join", "complement", "zero", "one"])

SUBSPACE_OPS = LatticeOps(
    leq=leq,
    meet=meet,
    join=join,
    complement=orthocomplement,
    zero=lambda x: Subspace.zero(x.ambient_dim),
    one=lambda x: Subspace.full(x.ambient_dim),
)

CLASSICAL_OPS = LatticeOps(
    leq=c_leq,
    meet=c_meet,
    join=c_join,
    complement=c_complement,
    zero=lambda x: ClassicalEvent.empty(x.universe_size),
    one=lambda x: ClassicalEvent.full(x.universe_size),
)


def _equal(x, y, ops):
    return ops.leq(x, y) and ops.leq(y, x)


def orthocomplement_axioms(e, f, ops=SUBSPACE_OPS):
    """Evaluate the four orthocomplement axioms for the pair (e, f).

    Returns:
        dict mapping axiom name to bool: ``meet_zero`` (E and E' = 0), ``join_one`` (E or E' = 1),
        ``involution`` (E'' = E) and ``order_reversing`` (E <= F implies F' <= E').
    """
    ec = ops.complement(e)
    return {
        "meet_zero": _equal(ops.meet(e, ec), ops.zero(e), ops),
        "join_one": _equal(ops.join(e, ec), ops.one(e), ops),
        "involution": _equal(ops.complement(ec), e, ops),
        "order_reversing": (not ops.leq(e, f)) or ops.leq(ops.complement(f), ec),
    }


def de_morgan_holds(a, b, ops=SUBSPACE_OPS):
    """(A or B)' == A' and B'."""
    return _equal(ops.complement(ops.join(a, b)), ops.meet(ops.complement(a), ops.complement(b)), ops)
