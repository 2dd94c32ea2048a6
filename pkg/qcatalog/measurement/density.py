"""Density operators (statistical operators) and the partial trace"""
import numpy as np

from ..exceptions import DimensionMismatchError, ImpossibleOutcomeError, NotSelfAdjointError
from ..hilbert.constants import TOL_NORM, TOL_ZERO
from ..hilbert.observables import Observable
from ..hilbert.operators import as_complex_matrix, check_projector, max_asymmetry
from ..hilbert.states import StateVector

__all__ = ["DensityOperator", "partial_trace"]


class DensityOperator:
    """
    Positive semidefinite, trace-one operator describing a pure state or a mixture.

    Args:
        matrix: the operator; checked for self-adjointness, positivity and unit trace within ``TOL_NORM``.
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix):
        rho = np.array(as_complex_matrix(matrix))
        asym = max_asymmetry(rho)
        if asym > TOL_NORM:
            raise NotSelfAdjointError(f"Density operator is not self-adjoint (max asymmetry {asym:.3e}).")
        rho = 0.5 * (rho + rho.conj().T)
        trace = float(np.real(np.trace(rho)))
        if abs(trace - 1.0) > TOL_NORM:
            raise ValueError(f"Density operator has trace {trace!r}, expected 1.")
        smallest = float(np.linalg.eigvalsh(rho)[0])
        if smallest < -TOL_NORM:
            raise ValueError(f"Density operator has negative eigenvalue {smallest:.3e}.")
        rho.setflags(write=False)
        self._matrix = rho

    @classmethod
    def from_state(cls, state: StateVector):
        return cls(state.projector())

    @classmethod
    def maximally_mixed(cls, dim):
        return cls(np.eye(dim) / dim)

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    def purity(self):
        """tr(rho^2); 1 exactly for pure states."""
        return float(np.real(np.trace(self._matrix @ self._matrix)))

    def probability(self, projector):
        p = check_projector(projector, dim=self.dim)
        return min(max(float(np.real(np.trace(self._matrix @ p))), 0.0), 1.0)

    def expectation(self, obs: Observable):
        if obs.dim != self.dim:
            raise DimensionMismatchError(f"Dimension mismatch: density {self.dim} vs observable {obs.dim}.")
        return float(np.real(np.trace(self._matrix @ obs.matrix)))

    def condition(self, projector):
        """Lueders update P rho P / tr(P rho) for the outcome whose projector is given."""
        p = check_projector(projector, dim=self.dim)
        prob = self.probability(p)
        if prob <= TOL_ZERO:
            raise ImpossibleOutcomeError(f"Cannot condition on an impossible outcome (probability {prob:.3e}).")
        return DensityOperator(p @ self._matrix @ p / prob)

    def isclose(self, other, atol=1e-9):
        return self.dim == other.dim and bool(np.allclose(self._matrix, other.matrix, atol=atol, rtol=0.0))

    def __repr__(self):
        return f"DensityOperator(dim={self.dim}, purity={self.purity():.6g})"


def partial_trace(rho: DensityOperator, dims, keep=0) -> DensityOperator:
    """Reduced state of one factor of a bipartite system.

    Args:
        rho: state on a space of dimension ``dims[0] * dims[1]``.
        dims: the factor dimensions ``(dim_a, dim_b)``.
        keep: factor to keep, 0 / ``"A"`` for the first and 1 / ``"B"`` for the second.
    """
    dim_a, dim_b = (int(d) for d in dims)
    if dim_a < 1 or dim_b < 1 or dim_a * dim_b != rho.dim:
        raise DimensionMismatchError(f"Dimension {rho.dim} does not factor as {dim_a} x {dim_b}.")
    keep = {"A": 0, "a": 0, "B": 1, "b": 1}.get(keep, keep)
    blocks = rho.matrix.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == 0:
        reduced = np.einsum("ijkj->ik", blocks)
    elif keep == 1:
        reduced = np.einsum("ijil->jl", blocks)
    else:
        raise ValueError(f"keep must be 0/'A' or 1/'B', but got {keep!r}.")
    return DensityOperator(reduced)
