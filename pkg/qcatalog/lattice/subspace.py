"""Closed subspaces of a finite-dimensional space and their lattice operations.

A :class:`Subspace` keeps an orthonormal basis as the rows of a ``(rank, ambient_dim)`` array.
Bases are not unique, so two subspaces are equal when each is contained in the other.

>>> x = Subspace.span([[1, 0]])
>>> y = Subspace.span([[0, 1]])
>>> (x | y) == Subspace.full(2)
True
>>> (x & y) == Subspace.zero(2)
True
>>> ~x == y
True
"""
import numpy as np

from ..exceptions import DimensionMismatchError
from ..hilbert.constants import TOL_RANK, get_max_dim
from ..hilbert.operators import check_projector

__all__ = [
    "Subspace",
    "leq",
    "meet",
    "join",
    "orthocomplement",
    "disjunction",
    "commutes",
    "commutator_norm",
    "random_subspace",
]

# residual and commutator cutoffs for order and compatibility decisions
TOL_LEQ = 1e-9
TOL_COMMUTE = 1e-9


def _orthonormal_rows(vectors, ambient_dim, tol=TOL_RANK):
    """Orthonormal basis (rows) of the span of ``vectors``; singular values <= tol are dropped."""
    if len(vectors) == 0:
        return np.zeros((0, ambient_dim), dtype=np.complex128)
    a = np.asarray(vectors, dtype=np.complex128).reshape(-1, ambient_dim)
    u, s, _ = np.linalg.svd(a.T, full_matrices=False)
    rank = int(np.sum(s > tol))
    return np.ascontiguousarray(u[:, :rank].T)


class Subspace:
    """
    Element of the lattice of closed subspaces.

    Don't call the constructor with an arbitrary spanning set, use :meth:`span`; the constructor
    trusts ``basis`` to be orthonormal.

    Args:
        basis: orthonormal vectors as rows, shape ``(rank, ambient_dim)``.
        ambient_dim (int): dimension of the surrounding space.
    """

    __slots__ = ("_basis", "_ambient_dim", "_projector")

    def __init__(self, basis, ambient_dim):
        if not 1 <= ambient_dim <= get_max_dim():
            raise DimensionMismatchError(f"Ambient dimension {ambient_dim} outside [1, {get_max_dim()}].")
        basis = np.asarray(basis, dtype=np.complex128).reshape(-1, ambient_dim)
        basis.setflags(write=False)
        self._basis = basis
        self._ambient_dim = int(ambient_dim)
        self._projector = None

    @classmethod
    def span(cls, vectors, ambient_dim=None):
        if ambient_dim is None:
            if len(vectors) == 0:
                raise ValueError("ambient_dim is required to span an empty set of vectors.")
            ambient_dim = np.asarray(vectors[0]).size
        return cls(_orthonormal_rows(vectors, ambient_dim), ambient_dim)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(np.zeros((0, ambient_dim)), ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        return cls(np.eye(ambient_dim), ambient_dim)

    @classmethod
    def from_projector(cls, projector):
        p = check_projector(projector)
        values, vectors = np.linalg.eigh(p)
        return cls(vectors[:, values > 0.5].T, p.shape[0])

    @classmethod
    def from_state(cls, state):
        """The ray spanned by a state vector."""
        return cls(state.amplitudes.reshape(1, -1), state.dim)

    @property
    def basis(self):
        return self._basis

    @property
    def ambient_dim(self):
        return self._ambient_dim

    @property
    def rank(self):
        return self._basis.shape[0]

    @property
    def projector(self):
        if self._projector is None:
            p = self._basis.T @ self._basis.conj()
            p.setflags(write=False)
            self._projector = p
        return self._projector

    def is_zero(self):
        return self.rank == 0

    def is_full(self):
        return self.rank == self._ambient_dim

    def __le__(self, other):
        return leq(self, other)

    def __ge__(self, other):
        return leq(other, self)

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __invert__(self):
        return orthocomplement(self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rank == other.rank and leq(self, other) and leq(other, self)

    __hash__ = None

    def __repr__(self):
        return f"<Subspace of rank {self.rank} in dimension {self._ambient_dim}>"


def _check_ambient(e, f):
    if e.ambient_dim != f.ambient_dim:
        raise DimensionMismatchError(f"Ambient dimension mismatch: {e.ambient_dim} vs {f.ambient_dim}.")


def leq(e: Subspace, f: Subspace) -> bool:
    """E <= F iff every basis vector of E survives projection onto F."""
    _check_ambient(e, f)
    if e.rank == 0:
        return True
    if e.rank > f.rank:
        return False
    residual = e.basis.T - f.projector @ e.basis.T
    return float(np.max(np.linalg.norm(residual, axis=0))) < TOL_LEQ


def meet(e: Subspace, f: Subspace) -> Subspace:
    """Greatest lower bound: the kernel of (I - P_E) + (I - P_F)."""
    _check_ambient(e, f)
    if e.rank == 0 or f.rank == 0:
        return Subspace.zero(e.ambient_dim)
    eye = np.eye(e.ambient_dim)
    m = (eye - e.projector) + (eye - f.projector)
    values, vectors = np.linalg.eigh(0.5 * (m + m.conj().T))
    return Subspace(vectors[:, values <= TOL_RANK].T, e.ambient_dim)


def join(e: Subspace, f: Subspace) -> Subspace:
    """Least upper bound: the span of both bases."""
    _check_ambient(e, f)
    if e.rank == 0:
        return f
    if f.rank == 0:
        return e
    return Subspace.span(np.vstack([e.basis, f.basis]), e.ambient_dim)


def orthocomplement(e: Subspace) -> Subspace:
    dim = e.ambient_dim
    if e.rank == 0:
        return Subspace.full(dim)
    # x is orthogonal to every basis row v iff conj(V) x = 0
    _, s, vh = np.linalg.svd(e.basis.conj(), full_matrices=True)
    rank = int(np.sum(s > TOL_RANK))
    return Subspace(vh[rank:].conj(), dim)


def disjunction(a: Subspace, b: Subspace) -> Subspace:
    """A or B defined from meet and orthocomplement: (A^perp and B^perp)^perp."""
    _check_ambient(a, b)
    return orthocomplement(meet(orthocomplement(a), orthocomplement(b)))


def commutator_norm(e: Subspace, f: Subspace) -> float:
    """Largest entry of |[P_E, P_F]|."""
    _check_ambient(e, f)
    pe, pf = e.projector, f.projector
    return float(np.max(np.abs(pe @ pf - pf @ pe)))


def commutes(e: Subspace, f: Subspace) -> bool:
    return commutator_norm(e, f) < TOL_COMMUTE


def random_subspace(ambient_dim, rng, rank=None):
    """Span of ``rank`` Gaussian random vectors; the rank is drawn uniformly when omitted."""
    if rank is None:
        rank = int(rng.integers(0, ambient_dim + 1))
    if rank == 0:
        return Subspace.zero(ambient_dim)
    z = rng.standard_normal((rank, ambient_dim)) + 1j * rng.standard_normal((rank, ambient_dim))
    return Subspace.span(z, ambient_dim)
