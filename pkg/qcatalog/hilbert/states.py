"""State vectors and the Born rule"""
import numpy as np

from ..exceptions import DimensionMismatchError, NotNormalizedError
from .constants import TOL_NORM, get_max_dim
from .operators import check_projector

__all__ = [
    "StateVector",
    "inner_product",
    "born_probability",
]


class StateVector:
    """
    Unit-norm complex amplitude vector, the catalog of predictions for one system.

    Args:
        amplitudes: sequence of complex amplitudes.
        normalize (bool): divide by the norm instead of rejecting a non-unit vector. Default: False.
    """

    __slots__ = ("_amplitudes",)

    def __init__(self, amplitudes, normalize=False):
        amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size < 1:
            raise DimensionMismatchError("A state vector needs at least one amplitude.")
        if amps.size > get_max_dim():
            raise DimensionMismatchError(f"State dimension {amps.size} exceeds the configured limit {get_max_dim()}.")
        norm = float(np.linalg.norm(amps))
        if normalize:
            if norm == 0.0:
                raise NotNormalizedError("Cannot normalize the zero vector.")
            amps = amps / norm
        elif abs(norm - 1.0) > TOL_NORM:
            raise NotNormalizedError(f"State vector has norm {norm!r}, expected 1 within {TOL_NORM:.0e}.")
        amps.setflags(write=False)
        self._amplitudes = amps

    @classmethod
    def basis(cls, dim, k):
        """The k-th canonical basis vector of a dim-dimensional space."""
        if not 0 <= k < dim:
            raise ValueError(f"Basis index {k} out of range for dimension {dim}.")
        amps = np.zeros(dim, dtype=np.complex128)
        amps[k] = 1.0
        return cls(amps)

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def dim(self):
        return self._amplitudes.size

    def norm(self):
        return float(np.linalg.norm(self._amplitudes))

    def projector(self):
        """Rank-1 projector |xi><xi|, the eigenspace reading of the same state."""
        return np.outer(self._amplitudes, self._amplitudes.conj())

    def isclose(self, other, up_to_phase=False, atol=1e-9):
        if self.dim != other.dim:
            return False
        if up_to_phase:
            return abs(abs(inner_product(self, other)) - 1.0) <= atol
        return bool(np.allclose(self._amplitudes, other.amplitudes, atol=atol, rtol=0.0))

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"StateVector({np.array2string(self._amplitudes, precision=6, separator=', ')})"


def _check_same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Dimension mismatch: {a.dim} vs {b.dim}.")


def inner_product(a: StateVector, b: StateVector) -> complex:
    """(a, b), conjugate-linear in the first argument."""
    _check_same_dim(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def born_probability(state: StateVector, eigenprojector) -> float:
    """Probability <xi, P xi> of finding the result whose eigenspace projector is ``eigenprojector``."""
    p = check_projector(eigenprojector, dim=state.dim)
    xi = state.amplitudes
    prob = float(np.real(np.vdot(xi, p @ xi)))
    return min(max(prob, 0.0), 1.0)
