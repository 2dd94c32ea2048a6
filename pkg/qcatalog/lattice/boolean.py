"""Boolean sublattices generated by compatible observables, and the distributive law"""
import itertools
import logging

import numpy as np

from ..exceptions import InvariantViolationError
from ..hilbert.observables import Observable
from .subspace import Subspace, _check_ambient, commutes, join, meet

__all__ = [
    "eigenspaces",
    "boolean_sublattice",
    "distributivity_holds",
    "non_distributive_witness",
]

_logger = logging.getLogger(__name__)

MAX_EIGENSPACES = 12
# exhaustive triple checks are cubic in the family size (32 elements -> 32768 triples)
MAX_EXHAUSTIVE_EIGENSPACES = 5


def eigenspaces(obs: Observable):
    return [Subspace(term.vectors, obs.dim) for term in obs.spectrum]


def distributivity_holds(a: Subspace, b: Subspace, c: Subspace) -> bool:
    """A and (B or C) == (A and B) or (A and C)."""
    _check_ambient(a, b)
    _check_ambient(a, c)
    return meet(a, join(b, c)) == join(meet(a, b), meet(a, c))


def boolean_sublattice(obs: Observable, verify=True):
    """All joins of subsets of the eigenspaces of ``obs``, indexed by bitmask over the spectrum.

    Element 0 is the zero subspace and the last element is the whole space.

    Args:
        obs: the observable whose eigenspaces generate the sublattice.
        verify (bool): check distributivity. Families of up to 32 elements are checked on every triple;
            larger ones are checked through their atoms (pairwise compatible, mutually orthogonal, spanning).
    """
    atoms = eigenspaces(obs)
    k = len(atoms)
    if k > MAX_EIGENSPACES:
        raise ValueError(f"Observable has {k} eigenspaces; at most {MAX_EIGENSPACES} are supported (2**k elements).")

    family = []
    for mask in range(1 << k):
        members = [atoms[j].basis for j in range(k) if mask >> j & 1]
        if members:
            family.append(Subspace(np.vstack(members), obs.dim))
        else:
            family.append(Subspace.zero(obs.dim))

    if verify:
        if k <= MAX_EXHAUSTIVE_EIGENSPACES:
            for a, b, c in itertools.product(family, repeat=3):
                if not distributivity_holds(a, b, c):
                    raise InvariantViolationError(f"Distributivity fails inside the sublattice of {obs!r}.")
        else:
            for e, f in itertools.combinations(atoms, 2):
                if not commutes(e, f) or not meet(e, f).is_zero():
                    raise InvariantViolationError(f"Eigenspaces of {obs!r} are not mutually orthogonal.")
            if not family[-1].is_full():
                raise InvariantViolationError(f"Eigenspaces of {obs!r} do not span the space.")
    _logger.debug("Boolean sublattice with %d elements from %d eigenspaces", len(family), k)
    return family


def non_distributive_witness(ambient_dim=2):
    """The spin-x / spin-z triple (A, B, C), embedded in the first two coordinates.

    A and (B or C) equals A while (A and B) or (A and C) is the zero subspace.
    """
    if ambient_dim < 2:
        raise ValueError(f"A non-distributive triple needs dimension >= 2, but got {ambient_dim}.")
    e0 = np.zeros(ambient_dim)
    e1 = np.zeros(ambient_dim)
    e0[0] = 1.0
    e1[1] = 1.0
    a = Subspace.span([(e0 + e1) / np.sqrt(2)], ambient_dim)
    b = Subspace.span([e0], ambient_dim)
    c = Subspace.span([e1], ambient_dim)
    return a, b, c
