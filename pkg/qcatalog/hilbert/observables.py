"""Observables and their spectral decomposition"""
import logging
from collections import namedtuple
from typing import List

import numpy as np

from ..exceptions import DimensionMismatchError
from .constants import TOL_DEGEN
from .operators import check_self_adjoint, identity, pauli_x, pauli_y, pauli_z, register_observable
from .states import StateVector, born_probability

__all__ = [
    "Eigenspace",
    "Observable",
    "spectral_decompose",
    "expectation_value",
]

_logger = logging.getLogger(__name__)

Eigenspace = namedtuple("Eigenspace", ["eigenvalue", "projector", "multiplicity", "vectors"])
Eigenspace.__doc__ = """One spectral term: eigenvalue, orthogonal projector, multiplicity and an orthonormal
basis of the eigenspace stored as rows of ``vectors``."""


class Observable:
    """Self-adjoint matrix together with its spectral decomposition.

    Build instances with :func:`spectral_decompose`; eigenvalues are strictly increasing.
    """

    def __init__(self, matrix, spectrum: List[Eigenspace]):
        self._matrix = matrix
        self._spectrum = tuple(spectrum)

    @property
    def matrix(self):
        return self._matrix

    @property
    def spectrum(self):
        return self._spectrum

    @property
    def dim(self):
        return self._matrix.shape[0]

    @property
    def eigenvalues(self):
        return [term.eigenvalue for term in self._spectrum]

    @property
    def projectors(self):
        return [term.projector for term in self._spectrum]

    def __len__(self):
        return len(self._spectrum)

    def eigenspace_basis(self, k):
        return self._spectrum[k].vectors

    def index_of(self, eigenvalue, tol=TOL_DEGEN):
        """Index of the spectral term carrying ``eigenvalue``."""
        for k, term in enumerate(self._spectrum):
            if abs(term.eigenvalue - eigenvalue) <= tol:
                return k
        raise ValueError(f"{eigenvalue} is not an eigenvalue of this observable.")

    def reconstruct(self):
        return sum(term.eigenvalue * term.projector for term in self._spectrum)

    def __repr__(self):
        values = ", ".join(f"{t.eigenvalue:.6g}(x{t.multiplicity})" for t in self._spectrum)
        return f"Observable(dim={self.dim}, spectrum=[{values}])"


def spectral_decompose(m) -> Observable:
    """Decompose a self-adjoint matrix into eigenvalue / eigenprojector pairs.

    Eigenvalues within ``TOL_DEGEN`` of the smallest eigenvalue of a group are merged into one
    eigenspace, whose eigenvalue is the mean of the merged values. A slowly rising ladder of
    eigenvalues therefore never collapses into one eigenspace wider than ``TOL_DEGEN``.
    """
    mat = check_self_adjoint(m)
    herm = 0.5 * (mat + mat.conj().T)
    values, vectors = np.linalg.eigh(herm)

    groups = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[groups[-1][0]] < TOL_DEGEN:
            groups[-1].append(i)
        else:
            groups.append([i])

    spectrum = []
    for group in groups:
        basis = vectors[:, group].T  # rows
        projector = basis.T @ basis.conj()
        projector.setflags(write=False)
        basis.setflags(write=False)
        spectrum.append(
            Eigenspace(
                eigenvalue=float(np.mean(values[group])),
                projector=projector,
                multiplicity=len(group),
                vectors=basis,
            )
        )
    _logger.debug("Spectral decomposition of dim %d: %d eigenspaces", mat.shape[0], len(spectrum))
    return Observable(mat, spectrum)


def expectation_value(state: StateVector, obs: Observable) -> float:
    """Expected result sum_k p_k x_k of measuring ``obs`` on ``state``."""
    if state.dim != obs.dim:
        raise DimensionMismatchError(f"Dimension mismatch: state {state.dim} vs observable {obs.dim}.")
    return float(sum(t.eigenvalue * born_probability(state, t.projector) for t in obs.spectrum))


@register_observable
def sigma_x():
    return spectral_decompose(pauli_x())


@register_observable
def sigma_y():
    return spectral_decompose(pauli_y())


@register_observable
def sigma_z():
    return spectral_decompose(pauli_z())


@register_observable
def identity_observable(dim=2):
    return spectral_decompose(identity(dim))


@register_observable
def number_operator(dim=2):
    """diag(0, 1, ..., dim - 1), nondegenerate in any dimension."""
    return spectral_decompose(np.diag(np.arange(dim, dtype=float)))
